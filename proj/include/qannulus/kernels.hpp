#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "qannulus/mode_ops.hpp"

namespace qannulus::kernels {

/// Worker count for parallel sweeps: QANNULUS_THREADS if set to a positive
/// integer, otherwise the OpenMP default.
int thread_count();
/// Overrides the worker count (0 restores the environment/default choice).
void set_thread_count(int n);

/// Integration regions of the HS double sum (n >= 0 labelling). They overlap
/// on their boundaries.
enum Region { kA, kB, kC1, kC2, kC3, kD1, kD2, kD3, kRegionCount };
inline constexpr std::array<const char*, kRegionCount> kRegionNames = {"A",  "B",  "C1", "C2",
                                                                       "C3", "D1", "D2", "D3"};
/// Membership of (l, j), j >= l, in each region for mode n >= 0.
std::array<bool, kRegionCount> region_membership(long n, long l, long j);

/// Log-weight rates of the HS sum: term = K(l,j)^2 e^{-A|l|} e^{B|j|}.
/// (A, B) = (a, b) is the HS norm of Q_n: l^2_{w'} -> l^2_w.
struct HsRates {
    double A = 0.0;
    double B = 0.0;
};

/// Window part of the HS double sum over -M <= l <= j <= M.
struct HsWindow {
    long M = 0;
    std::vector<double> row_sum;   // index l + M
    std::vector<double> row_sum_nonneg_j;  // part of row_sum with j >= 0
    std::vector<double> edge_col;  // term at (l, M + 1), index l + M
    std::array<double, kRegionCount> region{};
    double total = 0.0;
};

HsWindow hs_window(const ModeOperatorSpec& spec, HsRates rates, long M);

/// Contiguous lattice sites [lo, hi]; empty when hi < lo.
struct SiteRange {
    long lo = 0;
    long hi = -1;

    static SiteRange symmetric(long W) { return {-W, W}; }
    long size() const { return hi >= lo ? hi - lo + 1 : 0; }
};

/// Dense block of Q_n on `sites` in orthonormal bases:
/// entry (l, j) = K(l, j) sqrt(w(l) / w'(j)). Parallel by column.
Eigen::MatrixXd q_block(const ModeOperatorSpec& spec, SiteRange sites);

/// Dense block of D_n on `sites`: entry (l', l) = d(l', l) sqrt(w'(l') / w(l)).
Eigen::MatrixXd d_block(const ModeOperatorSpec& spec, SiteRange sites);

struct KernelEntry {
    long n = 0;
    long l = 0;
    long j = 0;
    KernelValue k;
};

/// All K_n(l, j) for n in [n_lo, n_hi], l and j in [-W, W], in (n, l, j)
/// lexicographic order.
std::vector<KernelEntry> kernel_sweep(const ModeOperatorSpec& base, long n_lo, long n_hi, long W);

/// Evaluates f(i) for i in [0, count) on the worker pool and returns the
/// results in index order.
template <class F>
auto ordered_map(long count, F f) -> std::vector<decltype(f(0L))> {
    std::vector<decltype(f(0L))> out(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
    for (long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = f(i);
    return out;
}

namespace serial {

/// Reference implementations: direct per-entry kernel evaluation, one thread.
HsWindow hs_window(const ModeOperatorSpec& spec, HsRates rates, long M);
Eigen::MatrixXd q_block(const ModeOperatorSpec& spec, SiteRange sites);
Eigen::MatrixXd d_block(const ModeOperatorSpec& spec, SiteRange sites);
std::vector<KernelEntry> kernel_sweep(const ModeOperatorSpec& base, long n_lo, long n_hi, long W);

template <class F>
auto ordered_map(long count, F f) -> std::vector<decltype(f(0L))> {
    std::vector<decltype(f(0L))> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) out.push_back(f(i));
    return out;
}

}  // namespace serial

}  // namespace qannulus::kernels
