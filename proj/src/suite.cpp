#include "qannulus/suite.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qannulus::suite {

namespace {

BoundReport le_row(std::string name, std::array<long, 3> idx, double computed, double majorant,
                   bool flagged = false) {
    BoundReport r;
    r.name = std::move(name);
    r.index = idx;
    r.computed = computed;
    r.majorant = majorant;
    r.satisfied = computed <= majorant;
    r.flagged = flagged;
    return r;
}

double ratio(double num, double den) { return den > 0.0 ? num / den : num; }

// Deterministic per-stream seed so that sections do not share draws.
std::uint64_t stream(std::uint64_t seed, std::uint64_t tag) { return seed * 0x9E3779B97F4A7C15ULL + tag; }

}  // namespace

CheckTable roundtrips(const WeightParams& p, const BetaFunction& beta, long n_max, long count,
                      std::uint64_t seed, double tol) {
    CheckTable t;
    const auto per_n = kernels::ordered_map(2 * n_max + 1, [&](long i) {
        const long n = i - n_max;
        const ModeOperatorSpec spec{n, beta, p};
        Rng rng(stream(seed, 100 + static_cast<std::uint64_t>(i)));
        std::vector<BoundReport> rows;
        for (long s = 0; s < count; ++s) {
            const long width = rng.integer(1, 8);
            const TailVector g = random_finite_vector(rng, rng.integer(-4, 4), width);
            const double gs = sup_norm(g);

            const QnResult q = apply_Qn(g, spec);
            const double e1 = sup_distance(apply_Dn(q.value, spec), g);
            rows.push_back(le_row("roundtrip.DnQn", {n, s, 0}, ratio(e1, gs), tol));

            const QnResult back = apply_Qn(apply_Dn(g, spec), spec);
            const double e2 = sup_distance(back.value, g);
            rows.push_back(le_row("roundtrip.QnDn", {n, s, 0}, ratio(e2, gs), tol));
        }
        return rows;
    });
    for (const auto& v : per_n) t.rows.insert(t.rows.end(), v.begin(), v.end());
    return t;
}

CheckTable implementation_identity(const WeightParams& p, const BetaFunction& beta, long pairs,
                                   std::uint64_t seed, double tol) {
    CheckTable t;
    Rng rng(stream(seed, 1));
    for (long s = 0; s < pairs; ++s) {
        const AlgebraElement a = random_element(rng);
        const FourierVector f = FourierVector::from_element(random_element(rng));
        const Residual r = check_implementation_identity(a, f, beta, p);
        t.rows.push_back(le_row("identity.implementation", {s, 0, 0}, r.relative(), tol));
    }
    return t;
}

CheckTable derivation_properties(const BetaFunction& beta, long samples, std::uint64_t seed, double tol) {
    CheckTable t;
    Rng rng(stream(seed, 2));
    const double thetas[] = {0.0, 1.0, std::numbers::pi / 7.0};
    for (long s = 0; s < samples; ++s) {
        const AlgebraElement x = random_element(rng);
        const AlgebraElement y = random_element(rng);
        const AlgebraElement lhs = derivation_delta(x * y, beta);
        const AlgebraElement t1 = derivation_delta(x, beta) * y;
        const AlgebraElement t2 = x * derivation_delta(y, beta);
        const double scale = std::max({sup_norm(lhs), sup_norm(t1), sup_norm(t2)});
        t.rows.push_back(le_row("derivation.leibniz", {s, 0, 0}, ratio(distance(lhs, t1 + t2), scale), tol));

        const AlgebraElement dx = derivation_delta(x, beta);
        for (int k = 0; k < 3; ++k) {
            const AlgebraElement left = rotate(dx, thetas[k]);
            const AlgebraElement right = std::polar(1.0, thetas[k]) * derivation_delta(rotate(x, thetas[k]), beta);
            t.rows.push_back(le_row("derivation.covariance", {s, k, 0}, ratio(distance(left, right), sup_norm(dx)), tol));
        }
    }
    return t;
}

CheckTable d_covariance(const WeightParams& p, const BetaFunction& beta, const std::vector<double>& thetas,
                        long samples, std::uint64_t seed, double tol) {
    CheckTable t;
    Rng rng(stream(seed, 3));
    for (long s = 0; s < samples; ++s) {
        const FourierVector f = FourierVector::from_element(random_element(rng));
        for (std::size_t k = 0; k < thetas.size(); ++k) {
            const Residual r = check_covariance(f, thetas[k], beta, p);
            t.rows.push_back(le_row("covariance.D", {s, static_cast<long>(k), 0}, r.norm.value, tol));
        }
    }
    return t;
}

CheckTable algebra_properties(long samples, std::uint64_t seed, double tol) {
    CheckTable t;
    Rng rng(stream(seed, 4));
    for (long s = 0; s < samples; ++s) {
        const AlgebraElement x = random_element(rng);
        const AlgebraElement y = random_element(rng);
        const AlgebraElement z = random_element(rng);
        t.rows.push_back(le_row("algebra.involution", {s, 0, 0}, distance(adjoint(adjoint(x)), x), 0.0));
        const AlgebraElement xy = x * y;
        t.rows.push_back(le_row("algebra.adjoint_product", {s, 0, 0},
                                ratio(distance(adjoint(xy), adjoint(y) * adjoint(x)), sup_norm(xy)), tol));
        const AlgebraElement l = (x * y) * z;
        t.rows.push_back(le_row("algebra.associativity", {s, 0, 0},
                                ratio(distance(l, x * (y * z)), sup_norm(l)), tol));
        t.rows.push_back(le_row("algebra.unit", {s, 0, 0},
                                distance(AlgebraElement::one() * x, x) + distance(x * AlgebraElement::one(), x), 0.0));
    }
    return t;
}

CheckTable kernel_agreement(long r, long sym_n) {
    CheckTable t;
    const WeightParams half = WeightParams::make(2.0, 1.0, 2.0 * std::numbers::ln2);
    const RationalScalar x(1, 2);
    const auto per_n = kernels::ordered_map(2 * r + 1, [&](long i) {
        const long n = i - r;
        const ModeOperatorSpec spec{n, BetaFunction::canonical(), half};
        std::vector<BoundReport> rows;
        for (long l = -r; l <= r; ++l) {
            double worst = 0.0;
            bool signs = true;
            for (long j = -r; j <= r; ++j) {
                const KernelValue k = qn_kernel(spec, l, j);
                const RationalScalar e = exact_kernel(n, l, j, x);
                if (k.sign != e.sign()) signs = false;
                if (k.sign != 0) worst = std::max(worst, std::abs(k.log_magnitude - e.log_abs()));
            }
            BoundReport row = le_row("kernel.exact", {n, l, 0}, worst, 1e-12);
            row.satisfied = row.satisfied && signs;
            rows.push_back(row);
        }
        return rows;
    });
    for (const auto& v : per_n) t.rows.insert(t.rows.end(), v.begin(), v.end());

    for (long n = -sym_n; n < 0; ++n) {
        const ModeOperatorSpec neg{n, BetaFunction::canonical(), WeightParams{}};
        const ModeOperatorSpec pos{-n - 1, BetaFunction::canonical(), WeightParams{}};
        double worst = 0.0;
        bool signs = true;
        for (long l = -r; l <= r; ++l)
            for (long j = -r; j <= r; ++j) {
                const KernelValue a = qn_kernel(neg, l, j);
                const KernelValue b = qn_kernel(pos, -j, -l);
                if (a.sign != -b.sign) signs = false;
                if (a.sign != 0) worst = std::max(worst, std::abs(a.log_magnitude - b.log_magnitude));
            }
        BoundReport row = le_row("kernel.negative_mode_symmetry", {n, 0, 0}, worst, 1e-12);
        row.satisfied = row.satisfied && signs;
        t.rows.push_back(row);
    }
    return t;
}

CheckTable closure(const WeightParams& p, const BetaFunction& beta, const std::vector<long>& Ns, double final_tol) {
    CheckTable t;
    const auto rows = closure_approx_check(Ns, beta, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i > 0) {
            t.rows.push_back(le_row("closure.decrease_wprime", {rows[i].N, rows[i - 1].N, 0},
                                    rows[i].w_prime.value + rows[i].w_prime.error, rows[i - 1].w_prime.value));
            t.rows.back().satisfied = rows[i].w_prime.value + rows[i].w_prime.error < rows[i - 1].w_prime.value;
            t.rows.push_back(le_row("closure.decrease_w", {rows[i].N, rows[i - 1].N, 0},
                                    rows[i].w.value + rows[i].w.error, rows[i - 1].w.value, true));
        }
    }
    if (!rows.empty()) {
        const auto& last = rows.back();
        t.rows.push_back(le_row("closure.final_wprime", {last.N, 0, 0}, last.w_prime.value + last.w_prime.error, final_tol));
        t.rows.push_back(le_row("closure.final_w", {last.N, 0, 0}, last.w.value + last.w.error, final_tol, true));
    }
    return t;
}

CheckTable regions(const WeightParams& p, long n_max) {
    CheckTable t;
    const auto reps = kernels::ordered_map(n_max + 1, [&](long n) { return region_bounds(n, p); });
    for (const auto& rep : reps) {
        const long n = rep.n;
        for (int k = 0; k < kernels::kRegionCount; ++k) {
            const bool informational = k == kernels::kA || k == kernels::kB || k == kernels::kD3;
            const bool known = n == 0 && (k == kernels::kC2 || k == kernels::kD1);
            BoundReport r = le_row(std::string("region.") + kernels::kRegionNames[k], {n, 0, 0}, rep.upper(k),
                                   rep.majorant[k], informational || known);
            r.computed = rep.window[k];
            r.error = rep.tail[k];
            t.rows.push_back(r);
        }
        BoundReport d = le_row("region.dominance", {n, 0, 0}, rep.hs.sq_window, rep.sum_lower());
        d.error = rep.hs.sq_tail;
        d.satisfied = rep.dominance();
        t.rows.push_back(d);
    }
    if (!reps.empty()) {
        t.rows.push_back(le_row("region.D1.geometric_factor", {0, 0, 0}, reps.front().geometric_factor, 1.0));
        t.rows.back().satisfied = reps.front().geometric_factor < 1.0;
    }
    if (reps.size() >= 2) {
        const auto& a = reps[reps.size() - 2];
        const auto& b = reps.back();
        t.rows.push_back(le_row("region.D2.decrease", {b.n, a.n, 0}, b.upper(kernels::kD2), a.window[kernels::kD2]));
        t.rows.push_back(le_row("region.D3.decrease", {b.n, a.n, 0}, b.upper(kernels::kD3), a.window[kernels::kD3]));
    }
    return t;
}

CheckTable beta_growth(const BetaFunction& beta) {
    CheckTable t;
    const BetaBound bb = beta_bound_constants(beta);
    BoundReport r = le_row("beta.constants", {bb.checked_range, 0, 0}, bb.c1, bb.c2);
    r.satisfied = bb.c1 > 0.0 && beta_bound_holds(beta, bb.c1, bb.c2, bb.checked_range);
    t.rows.push_back(r);
    return t;
}

}  // namespace qannulus::suite
