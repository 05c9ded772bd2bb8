#include "qannulus/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qannulus/compensated.hpp"
#include "qannulus/errors.hpp"

namespace qannulus {

namespace {

constexpr double kEps = 0x1p-53;
constexpr double kInf = std::numeric_limits<double>::infinity();

BoundReport exact_le(std::string name, std::array<long, 3> idx, const RationalScalar& lhs,
                     const RationalScalar& rhs, bool flagged = false) {
    BoundReport r;
    r.name = std::move(name);
    r.index = idx;
    r.computed = lhs.to_double();
    r.majorant = rhs.to_double();
    r.satisfied = lhs <= rhs;
    r.flagged = flagged;
    return r;
}

BoundReport exact_eq(std::string name, std::array<long, 3> idx, const RationalScalar& lhs,
                     const RationalScalar& rhs) {
    BoundReport r;
    r.name = std::move(name);
    r.index = idx;
    r.relation = BoundReport::Relation::eq;
    r.computed = lhs.to_double();
    r.majorant = rhs.to_double();
    r.satisfied = lhs == rhs;
    return r;
}

BoundReport numeric_le(std::string name, std::array<long, 3> idx, double computed, double error,
                       double majorant) {
    BoundReport r;
    r.name = std::move(name);
    r.index = idx;
    r.computed = computed;
    r.error = error;
    r.majorant = majorant;
    r.satisfied = computed + error <= majorant;
    return r;
}

RationalScalar ratz(const mpz_class& z) { return RationalScalar(z); }

}  // namespace

double BoundReport::margin() const {
    if (relation == Relation::eq) return satisfied ? 0.0 : -std::abs(majorant - computed);
    return majorant - (computed + error);
}

long CheckTable::passed() const {
    return std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.satisfied; });
}

long CheckTable::failed() const {
    return std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.satisfied && !r.flagged; });
}

long CheckTable::flagged_failed() const {
    return std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.satisfied && r.flagged; });
}

double CheckTable::worst_margin() const {
    double m = kInf;
    for (const auto& r : rows)
        if (!r.flagged && r.relation == BoundReport::Relation::le) m = std::min(m, r.margin());
    return m;
}

void CheckTable::append(const CheckTable& o) { rows.insert(rows.end(), o.rows.begin(), o.rows.end()); }

// ---------------------------------------------------------------------------
// q_n

RationalScalar qn_ratio_product(long n, long l) {
    mpz_class num = 1;
    mpz_class den = 1;
    for (long i = 1; i <= n; ++i) {
        num *= (2 * i - 1) * (2 * i - 1);
        const long d = 2 * l - 2 * i + 1;
        den *= d * d;
    }
    return RationalScalar(num, den);
}

RationalScalar qn_ratio_closed(long n, long l) {
    mpz_class num = 1;
    mpz_class den = 1;
    for (long k = n - l + 1; k <= n; ++k) num *= (2 * k - 1) * (2 * k - 1);
    for (long k = 1; k <= l; ++k) den *= (2 * k - 1) * (2 * k - 1);
    return RationalScalar(num, den);
}

RationalScalar qn_ratio(long n, long l) {
    if (l < 0 || l > n)
        throw DomainError("q_n(l) needs 0 <= l <= n, got n=" + std::to_string(n) + ", l=" + std::to_string(l));
    const RationalScalar p = qn_ratio_product(n, l);
    if (p != qn_ratio_closed(n, l))
        throw Error("q_n product and closed form disagree at n=" + std::to_string(n) + ", l=" + std::to_string(l));
    return p;
}

CheckTable check_lem1(long n_max) {
    const auto per_n = kernels::ordered_map(n_max + 1, [](long n) {
        std::vector<BoundReport> rows;
        std::vector<RationalScalar> q;
        for (long l = 0; l <= n; ++l) {
            const RationalScalar prod = qn_ratio_product(n, l);
            rows.push_back(exact_eq("lem1.identity", {n, l, 0}, prod, qn_ratio_closed(n, l)));
            q.push_back(prod);
        }
        for (long l = 0; l <= n; ++l) {
            const RationalScalar c2n = ratz(binomial(2 * n, 2 * l));
            rows.push_back(exact_le("lem1.est1", {n, l, 0}, RationalScalar(1), q[l]));
            rows.push_back(exact_le("lem1.est2", {n, l, 0}, q[l], RationalScalar(2 * l) * c2n, l == 0));
            for (long j = 0; j <= l; ++j) {
                const RationalScalar ratio = q[j] / q[l];
                rows.push_back(exact_le("lem1.est3.proof", {n, l, j}, ratio, ratz(binomial(2 * l, 2 * j)), true));
                rows.push_back(exact_le("lem1.est3.stated", {n, l, j}, ratio, c2n, true));
            }
        }
        return rows;
    });
    CheckTable t;
    for (const auto& v : per_n) t.rows.insert(t.rows.end(), v.begin(), v.end());
    return t;
}

// ---------------------------------------------------------------------------
// I_m

RationalScalar I_m_closed(long m, long j, const RationalScalar& x) {
    const RationalScalar omx = RationalScalar(1) - x;
    RationalScalar s(0);
    RationalScalar pw(1);
    for (long r = 0; r <= m; ++r) {
        s = s + ratz(binomial(2 * j + r - 1, r)) * pw;
        pw = pw * omx;
    }
    return s / omx.pow(m + 1);
}

RationalScalar I_m_recursive(long m, long j, const RationalScalar& x) {
    const RationalScalar omx = RationalScalar(1) - x;
    RationalScalar I = RationalScalar(1) / omx;
    for (long k = 1; k <= m; ++k) I = (I + ratz(binomial(2 * j + k - 1, 2 * j - 1))) / omx;
    return I;
}

double I_m_closed(long m, long j, double x) {
    const double omx = 1.0 - x;
    double s = 0.0;
    double pw = 1.0;
    for (long r = 0; r <= m; ++r) {
        s += binomial(2 * j + r - 1, r).get_d() * pw;
        pw *= omx;
    }
    return s / std::pow(omx, static_cast<double>(m + 1));
}

RationalScalar I_m_majorant(long m, long j, const RationalScalar& x) {
    return ratz(binomial(2 * j + m, m)) / (RationalScalar(1) - x).pow(m + 1);
}

namespace {

void check_unit_interval(double x) {
    if (!(x > 0.0 && x < 1.0)) throw DomainError("x must lie in (0, 1)");
}

// Sums t_0 + t_1 + ... where t_{k+1} = t_k * ratio(k) and ratio(k) is
// nonincreasing in k. Stops once the geometric majorant of the remainder is
// below rel * sum.
template <class Ratio>
Estimate monotone_ratio_series(double t0, Ratio ratio, double rel = 1e-18) {
    CompensatedSum s;
    double t = t0;
    double rel_err = 0.0;  // relative rounding error carried by t
    double term_err = 0.0;
    for (long k = 0;; ++k) {
        s.add(t);
        term_err += rel_err * t;
        const double r = ratio(k);
        const double next = t * r;
        rel_err += 4.0 * kEps;
        const double r_next = ratio(k + 1);
        if (r_next < 1.0) {
            const double tail = next / (1.0 - r_next) * (1.0 + rel_err);
            if (tail <= rel * s.value() || next == 0.0) {
                return {s.value(), tail + s.rounding_bound() + term_err + 2.0 * kEps * s.value()};
            }
        }
        if (k > 10'000'000) throw DivergenceError("series did not converge");
        t = next;
    }
}

}  // namespace

Estimate I_m_series(long m, long j, double x) {
    check_unit_interval(x);
    const double t0 = binomial(2 * j + m, m).get_d();
    const double c = static_cast<double>(2 * j);
    const double dm = static_cast<double>(m);
    // t_{k+1}/t_k = x (k + 2j + m + 1) / (k + 2j + 1)
    return monotone_ratio_series(t0, [&](long k) {
        const double dk = static_cast<double>(k);
        return x * (dk + c + dm + 1.0) / (dk + c + 1.0);
    });
}

CheckTable check_lem2(long m_max, long j_max, const RationalScalar& x) {
    const double xd = x.to_double();
    const auto per_j = kernels::ordered_map(j_max + 1, [&](long j) {
        std::vector<BoundReport> rows;
        RationalScalar prev(0);
        RationalScalar par(0);
        for (long m = 0; m <= m_max; ++m) {
            const RationalScalar closed = I_m_closed(m, j, x);
            rows.push_back(exact_eq("lem2.recursive", {m, j, 0}, I_m_recursive(m, j, x), closed));
            if (m >= 1) {
                const RationalScalar lhs = (RationalScalar(1) - x) * closed - prev;
                rows.push_back(exact_eq("lem2.reduction", {m, j, 0}, lhs, ratz(binomial(2 * j + m - 1, 2 * j - 1))));
            }
            par = par + ratz(binomial(2 * j + m - 1, m));
            rows.push_back(exact_eq("lem2.parallel", {m, j, 0}, par, ratz(binomial(2 * j + m, m))));

            const Estimate s = I_m_series(m, j, xd);
            const double cd = closed.to_double();
            BoundReport sr;
            sr.name = "lem2.series";
            sr.index = {m, j, 0};
            sr.relation = BoundReport::Relation::eq;
            sr.computed = s.value;
            sr.error = s.error + 2.0 * kEps * cd;
            sr.majorant = cd;
            sr.satisfied = std::abs(s.value - cd) <= sr.error;
            rows.push_back(sr);

            // The majorant is attained exactly when m = 0 or j = 0.
            const RationalScalar maj = I_m_majorant(m, j, x);
            BoundReport mr = exact_le("lem2.majorant", {m, j, 0}, closed, maj);
            if (m == 0 || j == 0) {
                mr.name = "lem2.majorant.equality";
                mr.relation = BoundReport::Relation::eq;
                mr.satisfied = closed == maj;
            } else {
                mr.satisfied = closed < maj;
            }
            rows.push_back(mr);
            prev = closed;
        }
        return rows;
    });
    CheckTable t;
    for (const auto& v : per_j) t.rows.insert(t.rows.end(), v.begin(), v.end());
    return t;
}

// ---------------------------------------------------------------------------
// J_n

Estimate J_n(long n, long j, double x) {
    check_unit_interval(x);
    const double x2 = x * x;
    // t_{k+1}/t_k = x^2 ((k+j+n+1/2)/(k+j+1/2))^2 by telescoping
    return monotone_ratio_series(1.0, [&](long k) {
        const double r = (static_cast<double>(k + j + n) + 0.5) / (static_cast<double>(k + j) + 0.5);
        return x2 * r * r;
    });
}

double J_n_majorant(long n, double x) {
    return static_cast<double>(2 * n + 1) / std::pow(1.0 - x, static_cast<double>(2 * n + 1));
}

CheckTable check_lem3(long n_max, long j_max, const std::vector<double>& xs) {
    CheckTable t;
    for (std::size_t xi = 0; xi < xs.size(); ++xi) {
        const double x = xs[xi];
        const auto per_n = kernels::ordered_map(n_max + 1, [&](long n) {
            std::vector<BoundReport> rows;
            const double maj = J_n_majorant(n, x);
            for (long j = 0; j <= j_max; ++j) {
                const Estimate e = J_n(n, j, x);
                rows.push_back(numeric_le("lem3.majorant", {n, j, static_cast<long>(xi)}, e.value, e.error, maj));
            }
            return rows;
        });
        for (const auto& v : per_n) t.rows.insert(t.rows.end(), v.begin(), v.end());
    }
    return t;
}

// ---------------------------------------------------------------------------
// HS norm

double HsResult::value() const { return std::sqrt(sq_window); }

double HsResult::bound() const { return std::sqrt(sq_window + sq_tail) - value(); }

HsTail hs_tail_parts(const ModeOperatorSpec& spec, kernels::HsRates rates, const kernels::HsWindow& w) {
    const long M = w.M;
    const long n = spec.n;
    const BetaFunction& beta = spec.beta;
    const double x2 = spec.x() * spec.x();
    const double dAB = rates.A - rates.B;
    if (!(dAB > 0.0)) return {kInf, kInf, kInf, kInf};
    const auto geo = [](double r) { return r < 1.0 ? 1.0 / (1.0 - r) : kInf; };

    // Along a row, for j >= M+1 >= 1:
    //   T(l, j+1) / T(l, j) = x^2 e^B (beta(j) / beta(j+n+1))^2.
    const double rho_g = x2 * std::exp(rates.B) * sup_sq_ratio_right(beta, M + 1, 0, n + 1);
    const double g_row = geo(rho_g);

    // Rows inside the window, columns beyond M.
    CompensatedSum edge;
    for (const double e : w.edge_col) edge.add(e);
    const double tail_cols = edge.value() * g_row;

    // Rows l > M: each row is at most its diagonal term T(l, l) =
    // e^{-(A-B) l} / beta(l+n)^2 times the row factor.
    const auto diag = [&](long l) {
        const double b = beta(l + n);
        return std::exp(-dAB * std::abs(static_cast<double>(l))) / (b * b);
    };
    const double sig_r = std::exp(-dAB) * sup_sq_ratio_right(beta, M + 1, n, n + 1);
    const double tail_right = diag(M + 1) * geo(sig_r) * g_row;

    // Rows l < -M: R(l-1) = rho_l R(l) + T(l-1, l-1) with
    //   rho_l = x^2 e^{-A} (beta(l-1) / beta(l+n-1))^2,
    // so sum_{l<-M} R(l) <= (rho R(-M) + sum of diagonals) / (1 - rho).
    const double rho_f = x2 * std::exp(-rates.A) * sup_sq_ratio_left(beta, -M - 1, 0, n);
    const double r0 = w.row_sum.front() + w.edge_col.front() * g_row;
    const double sig_l = std::exp(-dAB) * sup_sq_ratio_left(beta, -M - 2, n + 1, n);
    const double diag_left = diag(-M - 1) * geo(sig_l);
    const double tail_left = (rho_f * r0 + diag_left) * geo(rho_f);

    // The columns j >= 0 alone obey R+(l-1) = rho_l R+(l) for l <= 0.
    const double r0_nonneg = w.row_sum_nonneg_j.front() + w.edge_col.front() * g_row;
    const double tail_left_nonneg = rho_f * r0_nonneg * geo(rho_f);

    // Window rounding: each term carries a few ulps from exp/log.
    const double slack = 1.0 + 1e-12;
    const auto clean = [&](double v) { return std::isfinite(v) ? v * slack : kInf; };
    HsTail t{clean(tail_cols), clean(tail_right), clean(tail_left), clean(tail_left_nonneg)};
    t.cols += 64.0 * kEps * w.total;
    return t;
}

double hs_tail_bound(const ModeOperatorSpec& spec, kernels::HsRates rates, const kernels::HsWindow& w) {
    return hs_tail_parts(spec, rates, w).total();
}

HsResult hs_norm_general(const ModeOperatorSpec& spec, kernels::HsRates rates, HsOptions opt) {
    const BetaFunction& beta = spec.beta;
    const long reach = std::max(std::abs(beta.table_min()), std::abs(beta.affine_right_start()));
    long M = opt.M > 0 ? opt.M : std::max({16L, 2 * std::abs(spec.n) + 8, reach + std::abs(spec.n) + 4});
    for (;;) {
        HsResult r;
        r.M = M;
        r.window = kernels::hs_window(spec, rates, M);
        r.sq_window = r.window.total;
        r.tail = hs_tail_parts(spec, rates, r.window);
        r.sq_tail = r.tail.total();
        if (opt.M > 0) return r;
        if (r.sq_tail <= opt.rel_tol * r.sq_window) return r;
        if (2 * M > opt.max_M) {
            std::ostringstream os;
            os << "HS sum for mode " << spec.n << " could not be certified within window " << M;
            throw DivergenceError(os.str());
        }
        M *= 2;
    }
}

HsResult hs_norm_Qn(long n, const WeightParams& p, const BetaFunction& beta, HsOptions opt) {
    std::string violated;
    if (!(p.gamma > p.a)) violated = "γ > a";
    if (!(p.a > p.b)) violated += std::string(violated.empty() ? "" : " and ") + "a > b";
    if (!violated.empty()) {
        std::ostringstream os;
        os << "HS norm requires gamma > a > b; violated: " << violated << " (a=" << p.a << ", b=" << p.b
           << ", gamma=" << p.gamma << ")";
        throw DivergenceError(os.str());
    }
    return hs_norm_general({n, beta, p}, {p.a, p.b}, opt);
}

HsResult hs_norm_mirror(long n, const WeightParams& p, HsOptions opt) {
    return hs_norm_general({-n - 1, BetaFunction::canonical(), p}, {-p.b, -p.a}, opt);
}

// ---------------------------------------------------------------------------
// regions

namespace {

double sum_A_majorant(long n, const WeightParams& p) {
    // sum_{j >= l >= 0} e^{-g(j-l) - a l + b j} / (j+n+1/2)^2 with j = l + d.
    CompensatedSum s;
    const long N = 400;
    for (long l = 0; l < N; ++l)
        for (long d = 0; d < N; ++d) {
            const double den = static_cast<double>(l + d + n) + 0.5;
            s.add(std::exp(-(p.a - p.b) * l - (p.gamma - p.b) * d) / (den * den));
        }
    return s.value();
}

}  // namespace

double region_majorant(int region, long n, const WeightParams& p) {
    const double g = p.gamma, a = p.a, b = p.b;
    const double dn = static_cast<double>(n);
    const double h2 = (dn + 0.5) * (dn + 0.5);
    const double e_ga2 = std::exp(-(g + a) / 2.0);
    const double s = e_ga2 + std::exp(-(a - b) / 2.0);
    switch (region) {
        case kernels::kA:
        case kernels::kB: return sum_A_majorant(n, p);
        case kernels::kC1: return 1.0 / h2 / ((1.0 - std::exp(-(g + a))) * (1.0 - std::exp(-(2 * g + a - b))));
        case kernels::kC2: return (2 * dn + 1) * std::exp(-(g + a) * dn) / std::pow(1.0 - e_ga2, 2 * dn + 1);
        case kernels::kC3:
            return std::exp(-(g + a) * dn) / (h2 * (1.0 - std::exp(-(g - b))) * (1.0 - std::exp(-(2 * g + a - b))));
        case kernels::kD1: return dn * (2 * dn + 1) * std::pow(s / (1.0 - e_ga2), 2 * dn);
        case kernels::kD2: {
            CompensatedSum t;
            for (long j = 0; j < 4000; ++j) {
                const double d = static_cast<double>(j) - 0.5;
                t.add(std::exp(-(a - b) * j) / (d * d));
            }
            return (2 * dn + 1) * std::exp(-(a - b) * dn) / std::pow(1.0 - e_ga2, 2 * dn + 1) * t.value();
        }
        case kernels::kD3: {
            CompensatedSum t;
            for (long l = 0; l < 4000; ++l) {
                const double d = static_cast<double>(l) / 2.0 - dn - 1.0 / 3.0;
                t.add(std::pow(s, static_cast<double>(l)) / (d * d));
            }
            return t.value();
        }
        default: break;
    }
    throw std::invalid_argument("unknown region");
}

double RegionReport::sum_lower() const {
    CompensatedSum s;
    for (const double v : window) s.add(v);
    return s.value();
}

RegionReport region_bounds(long n, const WeightParams& p, HsOptions opt) {
    if (n < 0) throw DomainError("region decomposition is stated for n >= 0");
    if (!check_admissible(p).admissible)
        throw DivergenceError("region bounds need admissible parameters (gamma > a > b and "
                              "e^{-(a-b)/2} + e^{-(gamma+a)/2} < 1)");
    RegionReport r;
    r.n = n;
    r.hs = hs_norm_Qn(n, p, BetaFunction::canonical(), opt);
    r.window = r.hs.window.region;
    // Outside the window: A meets l > M and j > M; B meets j > M and l < -M;
    // C lies in l < -M, j >= 0; D in l < -M.
    const HsTail& t = r.hs.tail;
    const double rounding = 64.0 * kEps * r.hs.sq_window;
    for (int k = 0; k < kernels::kRegionCount; ++k) {
        switch (k) {
            case kernels::kA: r.tail[k] = t.cols + t.right; break;
            case kernels::kB: r.tail[k] = t.cols + t.left; break;
            case kernels::kC1: case kernels::kC2: case kernels::kC3: r.tail[k] = t.left_nonneg; break;
            default: r.tail[k] = t.left; break;
        }
        r.tail[k] += rounding * r.window[k] / std::max(r.hs.sq_window, 1e-300);
    }
    for (int k = 0; k < kernels::kRegionCount; ++k) r.majorant[k] = region_majorant(k, n, p);
    const double e = std::exp(-(p.gamma + p.a) / 2.0);
    r.geometric_factor = (e + std::exp(-(p.a - p.b) / 2.0)) / (1.0 - e);
    return r;
}

// ---------------------------------------------------------------------------
// decay

bool DecayReport::decaying() const {
    if (rows.empty()) return false;
    const long n_lo = rows.front().n;
    const long n_hi = rows.back().n;
    if (!onset_positive || !onset_negative) return false;
    return *onset_positive <= n_hi - 2 && *onset_negative <= -n_lo - 2;
}

DecayReport decay_experiment(const WeightParams& p, const BetaFunction& beta, long n_lo, long n_hi,
                             HsOptions opt) {
    DecayReport rep;
    const Admissibility adm = check_admissible(p);
    rep.hs_finite = adm.hs_finite;
    rep.admissible = adm.admissible;
    if (n_hi < n_lo) return rep;
    const bool mirror = beta.is_canonical();
    rep.rows = kernels::ordered_map(n_hi - n_lo + 1, [&](long i) {
        DecayRow row;
        row.n = n_lo + i;
        row.hs = hs_norm_Qn(row.n, p, beta, opt);
        if (mirror && row.n < 0) row.mirror = hs_norm_mirror(row.n, p, opt).value();
        return row;
    });

    const auto at = [&](long n) -> const HsResult& { return rep.rows[static_cast<std::size_t>(n - n_lo)].hs; };
    for (const auto& r : rep.rows) {
        rep.max_norm = std::max(rep.max_norm, r.hs.value());
        if (r.mirror)
            rep.max_mirror_rel_diff =
                std::max(rep.max_mirror_rel_diff, std::abs(*r.mirror - r.hs.value()) / r.hs.value());
    }

    // Certified strict decrease: upper(next) < lower(current).
    if (n_hi >= 0) {
        long n0 = n_hi;
        while (n0 - 1 >= std::max(0L, n_lo) && at(n0).upper() < at(n0 - 1).value()) --n0;
        rep.onset_positive = n0;
    }
    if (n_lo <= 0) {
        long m0 = -n_lo;
        while (m0 - 1 >= std::max(0L, -n_hi) && at(-m0).upper() < at(-(m0 - 1)).value()) --m0;
        rep.onset_negative = m0;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// beta growth

BetaBound beta_bound_constants(const BetaFunction& beta, long range) {
    range = std::max({range, std::abs(beta.table_min()) + 1, std::abs(beta.affine_right_start()) + 1});
    BetaBound bb;
    bb.c1 = std::abs(beta.slope());
    bb.c2 = std::abs(beta.slope());
    for (long l = -range; l <= range; ++l) {
        const double r = std::abs(beta(l)) / (static_cast<double>(std::abs(l)) + 1.0);
        bb.c1 = std::min(bb.c1, r);
        bb.c2 = std::max(bb.c2, r);
    }
    bb.checked_range = range;
    return bb;
}

bool beta_bound_holds(const BetaFunction& beta, double c1, double c2, long range) {
    range = std::max({range, std::abs(beta.table_min()) + 1, std::abs(beta.affine_right_start()) + 1});
    for (long l = -range; l <= range; ++l) {
        const double v = std::abs(beta(l));
        const double s = static_cast<double>(std::abs(l)) + 1.0;
        if (c1 * s > v || v > c2 * s) return false;
    }
    // Beyond the range |beta(l)|/(|l|+1) moves monotonically to |slope|.
    const double lim = std::abs(beta.slope());
    return c1 <= lim && lim <= c2;
}

}  // namespace qannulus
