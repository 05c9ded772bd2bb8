#include "qannulus/kernels.hpp"

#include <omp.h>

#include <cmath>
#include <cstdlib>
#include <string>

#include "qannulus/compensated.hpp"

namespace qannulus::kernels {

namespace {

int g_override = 0;

int env_threads() {
    static const int n = [] {
        const char* s = std::getenv("QANNULUS_THREADS");
        if (s == nullptr) return 0;
        char* end = nullptr;
        const long v = std::strtol(s, &end, 10);
        return (end != s && *end == '\0' && v > 0) ? static_cast<int>(v) : 0;
    }();
    return n;
}

struct RowResult {
    double sum = 0.0;
    double nonneg = 0.0;
    double edge = 0.0;
    std::array<double, kRegionCount> region{};
};

double log_abs_beta(const BetaFunction& beta, long k) { return std::log(std::abs(beta(k))); }

// Row l of the window sum. `log_k(j)` yields log|K(l, j)| for j = l .. M + 1
// in increasing order.
template <class LogK>
RowResult hs_row(const ModeOperatorSpec& spec, HsRates r, long M, long l, LogK&& log_k) {
    RowResult out;
    CompensatedSum s;
    CompensatedSum nonneg;
    std::array<CompensatedSum, kRegionCount> reg;
    const double wl = -r.A * std::abs(static_cast<double>(l));
    for (long j = l; j <= M + 1; ++j) {
        const double t = std::exp(2.0 * log_k(j) + wl + r.B * std::abs(static_cast<double>(j)));
        if (j == M + 1) {
            out.edge = t;
            break;
        }
        s.add(t);
        if (j >= 0) nonneg.add(t);
        if (spec.n >= 0) {
            const auto m = region_membership(spec.n, l, j);
            for (int k = 0; k < kRegionCount; ++k)
                if (m[k]) reg[k].add(t);
        }
    }
    out.sum = s.value();
    out.nonneg = nonneg.value();
    for (int k = 0; k < kRegionCount; ++k) out.region[k] = reg[k].value();
    return out;
}

HsWindow reduce(long M, const std::vector<RowResult>& rows) {
    HsWindow w;
    w.M = M;
    CompensatedSum total;
    std::array<CompensatedSum, kRegionCount> reg;
    for (const auto& r : rows) {
        w.row_sum.push_back(r.sum);
        w.row_sum_nonneg_j.push_back(r.nonneg);
        w.edge_col.push_back(r.edge);
        total.add(r.sum);
        for (int k = 0; k < kRegionCount; ++k) reg[k].add(r.region[k]);
    }
    w.total = total.value();
    for (int k = 0; k < kRegionCount; ++k) w.region[k] = reg[k].value();
    return w;
}

double d_entry(const ModeOperatorSpec& spec, long lp, long l) {
    if (lp == l) return spec.beta(l + spec.n);
    if (lp == l - 1) return -spec.beta(lp) * spec.x();
    return 0.0;
}

double orth_scale(const WeightParams& p, Weight to, long row, Weight from, long col) {
    return std::exp(0.5 * (log_weight(p, to, row) - log_weight(p, from, col)));
}

}  // namespace

int thread_count() {
    if (g_override > 0) return g_override;
    if (const int e = env_threads(); e > 0) return e;
    return omp_get_max_threads();
}

void set_thread_count(int n) { g_override = n > 0 ? n : 0; }

std::array<bool, kRegionCount> region_membership(long n, long l, long j) {
    std::array<bool, kRegionCount> m{};
    m[kA] = l >= 0;
    m[kB] = l <= 0 && j >= -l;
    if (l <= 0 && j >= 0 && j <= -l) {
        const long L = -l;
        m[kC1] = L <= n;
        m[kC2] = L >= n && j <= L - n;
        m[kC3] = L >= n && j >= L - n;
    }
    if (j <= 0) {
        const long L = -l;
        const long J = -j;
        m[kD1] = J <= n && n <= L;
        m[kD2] = n <= J;
        m[kD3] = L <= n;
    }
    return m;
}

HsWindow hs_window(const ModeOperatorSpec& spec, HsRates rates, long M) {
    const long rows = 2 * M + 1;
    const double lx = spec.log_x();
    const auto rows_out = ordered_map(rows, [&](long i) {
        const long l = i - M;
        // log|K(l, l)| = -log|beta(l+n)|; each step j -> j+1 adds
        // log x + log|beta(j)| - log|beta(j+n+1)|.
        double lk = -log_abs_beta(spec.beta, l + spec.n);
        long at = l;
        return hs_row(spec, rates, M, l, [&](long j) {
            while (at < j) {
                lk += lx + log_abs_beta(spec.beta, at) - log_abs_beta(spec.beta, at + spec.n + 1);
                ++at;
            }
            return lk;
        });
    });
    return reduce(M, rows_out);
}

Eigen::MatrixXd q_block(const ModeOperatorSpec& spec, SiteRange sites) {
    const long N = sites.size();
    Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(N, N);
#pragma omp parallel for schedule(static) num_threads(thread_count())
    for (long c = 0; c < N; ++c) {
        const long j = sites.lo + c;
        for (long r = 0; r <= c; ++r) {
            const long l = sites.lo + r;
            const KernelValue k = qn_kernel(spec, l, j);
            Q(r, c) = k.value() * orth_scale(spec.params, Weight::w, l, Weight::w_prime, j);
        }
    }
    return Q;
}

Eigen::MatrixXd d_block(const ModeOperatorSpec& spec, SiteRange sites) {
    const long N = sites.size();
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(N, N);
#pragma omp parallel for schedule(static) num_threads(thread_count())
    for (long c = 0; c < N; ++c) {
        const long l = sites.lo + c;
        for (long r = std::max(0L, c - 1); r <= c; ++r) {
            const long lp = sites.lo + r;
            D(r, c) = d_entry(spec, lp, l) * orth_scale(spec.params, Weight::w_prime, lp, Weight::w, l);
        }
    }
    return D;
}

std::vector<KernelEntry> kernel_sweep(const ModeOperatorSpec& base, long n_lo, long n_hi, long W) {
    const long side = 2 * W + 1;
    const long per_n = side * side;
    const long count = n_hi >= n_lo ? (n_hi - n_lo + 1) * per_n : 0;
    std::vector<KernelEntry> out(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static) num_threads(thread_count())
    for (long i = 0; i < count; ++i) {
        ModeOperatorSpec s = base;
        s.n = n_lo + i / per_n;
        const long l = (i % per_n) / side - W;
        const long j = i % side - W;
        out[static_cast<std::size_t>(i)] = {s.n, l, j, qn_kernel(s, l, j)};
    }
    return out;
}

namespace serial {

HsWindow hs_window(const ModeOperatorSpec& spec, HsRates rates, long M) {
    std::vector<RowResult> rows;
    for (long l = -M; l <= M; ++l)
        rows.push_back(hs_row(spec, rates, M, l, [&](long j) { return qn_kernel(spec, l, j).log_magnitude; }));
    return reduce(M, rows);
}

Eigen::MatrixXd q_block(const ModeOperatorSpec& spec, SiteRange sites) {
    const long N = sites.size();
    Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(N, N);
    for (long c = 0; c < N; ++c)
        for (long r = 0; r <= c; ++r)
            Q(r, c) = qn_kernel(spec, sites.lo + r, sites.lo + c).value() *
                      orth_scale(spec.params, Weight::w, sites.lo + r, Weight::w_prime, sites.lo + c);
    return Q;
}

Eigen::MatrixXd d_block(const ModeOperatorSpec& spec, SiteRange sites) {
    const long N = sites.size();
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(N, N);
    for (long c = 0; c < N; ++c)
        for (long r = 0; r < N; ++r)
            if (const double d = d_entry(spec, sites.lo + r, sites.lo + c); d != 0.0)
                D(r, c) = d * orth_scale(spec.params, Weight::w_prime, sites.lo + r, Weight::w, sites.lo + c);
    return D;
}

std::vector<KernelEntry> kernel_sweep(const ModeOperatorSpec& base, long n_lo, long n_hi, long W) {
    std::vector<KernelEntry> out;
    for (long n = n_lo; n <= n_hi; ++n) {
        ModeOperatorSpec s = base;
        s.n = n;
        for (long l = -W; l <= W; ++l)
            for (long j = -W; j <= W; ++j) out.push_back({n, l, j, qn_kernel(s, l, j)});
    }
    return out;
}

}  // namespace serial

}  // namespace qannulus::kernels
