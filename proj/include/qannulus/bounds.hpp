#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qannulus/kernels.hpp"
#include "qannulus/mode_ops.hpp"
#include "qannulus/rational.hpp"

namespace qannulus {

/// One checked relation: lhs (+ error) against rhs.
struct BoundReport {
    enum class Relation { le, eq };

    std::string name;
    std::array<long, 3> index{};  // meaning depends on the check, e.g. (n, l, j)
    Relation relation = Relation::le;
    double computed = 0.0;
    double error = 0.0;
    double majorant = 0.0;
    bool satisfied = false;
    bool flagged = false;  // reported separately, never fails a run

    /// majorant - (computed + error); 0 for exact equalities that hold.
    double margin() const;
};

struct CheckTable {
    std::vector<BoundReport> rows;

    long passed() const;
    long failed() const;  // unflagged failures
    long flagged_failed() const;
    /// Smallest margin over unflagged le-rows.
    double worst_margin() const;
    void append(const CheckTable& o);
};

// --- q_n ---------------------------------------------------------------

/// q_n(l) from its defining product (1/2 ... (n-1/2))^2 / ((l-1/2) ... (l-n+1/2))^2.
RationalScalar qn_ratio_product(long n, long l);
/// q_n(l) from ((2n-2l+1) ... (2n-1))^2 / (1 * 3 ... (2l-1))^2.
RationalScalar qn_ratio_closed(long n, long l);
/// Both forms; throws DomainError unless 0 <= l <= n, and Error if they differ.
RationalScalar qn_ratio(long n, long l);

/// Exact identity and the three estimates for 0 <= j <= l <= n <= n_max.
/// Row names: lem1.identity, lem1.est1, lem1.est2 (l = 0 flagged),
/// lem1.est3.proof (C(2l,2j)) and lem1.est3.stated (C(2n,2l)), both flagged.
CheckTable check_lem1(long n_max);

// --- I_m ---------------------------------------------------------------

/// (1-x)^{-(m+1)} sum_{r=0}^m C(2j+r-1, r) (1-x)^r, exact.
RationalScalar I_m_closed(long m, long j, const RationalScalar& x);
/// I_0 = 1/(1-x), (1-x) I_m = I_{m-1} + C(2j+m-1, 2j-1), exact.
RationalScalar I_m_recursive(long m, long j, const RationalScalar& x);
double I_m_closed(long m, long j, double x);
/// sum_k C(k+2j+m, m) x^k truncated once the certified geometric tail is
/// negligible; error covers the tail and rounding.
Estimate I_m_series(long m, long j, double x);
/// C(2j+m, m) / (1-x)^{m+1}
RationalScalar I_m_majorant(long m, long j, const RationalScalar& x);

/// Reduction formula, recursive vs closed form, series vs closed form,
/// parallel summation, and the majorant, for m <= m_max, j <= j_max.
CheckTable check_lem2(long m_max, long j_max, const RationalScalar& x);

// --- J_n ---------------------------------------------------------------

/// sum_k prod_{i=1}^n ((k+j+i-1/2)/(j+i-1/2))^2 x^{2k} with certified tail.
Estimate J_n(long n, long j, double x);
double J_n_majorant(long n, double x);
CheckTable check_lem3(long n_max, long j_max, const std::vector<double>& xs);

// --- HS norm -----------------------------------------------------------

struct HsOptions {
    long M = 0;            // 0: grow the window until the tail is negligible
    double rel_tol = 1e-13;  // target tail / window-sum
    long max_M = 4096;
};

/// Certified bounds on the parts of the HS double sum outside [-M, M]^2;
/// +inf when the geometric majorants are not yet certified at this M.
struct HsTail {
    double cols = 0.0;          // -M <= l <= M, j > M
    double right = 0.0;         // l > M
    double left = 0.0;          // l < -M
    double left_nonneg = 0.0;   // l < -M, j >= 0

    double total() const { return cols + right + left; }
};

struct HsResult {
    double sq_window = 0.0;  // window part (lower bound for ||.||_HS^2)
    double sq_tail = 0.0;    // certified bound on the rest
    HsTail tail;
    long M = 0;
    kernels::HsWindow window;

    double value() const;  // sqrt(sq_window)
    double bound() const;  // sqrt(sq_window + sq_tail) - value()
    double upper() const { return value() + bound(); }
};

HsTail hs_tail_parts(const ModeOperatorSpec& spec, kernels::HsRates rates, const kernels::HsWindow& w);
double hs_tail_bound(const ModeOperatorSpec& spec, kernels::HsRates rates, const kernels::HsWindow& w);

/// ||Q_n||_HS from l^2_{w'} to l^2_w. Throws DivergenceError unless
/// gamma > a > b, naming the violated inequality.
HsResult hs_norm_Qn(long n, const WeightParams& p, const BetaFunction& beta, HsOptions opt = {});
/// General log-weight rates; throws DivergenceError if the tail cannot be
/// certified within opt.max_M.
HsResult hs_norm_general(const ModeOperatorSpec& spec, kernels::HsRates rates, HsOptions opt = {});

/// The mirror of ||Q_n|| under (l, j) -> (-j, -l): mode -n-1 with rates
/// (A, B) = (-b, -a). Canonical beta only.
HsResult hs_norm_mirror(long n, const WeightParams& p, HsOptions opt = {});

// --- regions -----------------------------------------------------------

struct RegionReport {
    long n = 0;
    HsResult hs;
    std::array<double, kernels::kRegionCount> window{};    // window part of each region sum
    std::array<double, kernels::kRegionCount> tail{};      // certified bound on the rest
    std::array<double, kernels::kRegionCount> majorant{};  // closed-form / numeric majorant (lower estimate)
    double geometric_factor = 0.0;  // (e^{-(g+a)/2} + e^{-(a-b)/2}) / (1 - e^{-(g+a)/2})

    /// Certified upper bound of region r.
    double upper(int r) const { return window[r] + tail[r]; }
    double sum_lower() const;
    bool dominance() const { return hs.sq_window + hs.sq_tail <= sum_lower(); }
    bool within(int r) const { return upper(r) <= majorant[r]; }
};

/// Region sums and majorants for mode n >= 0. Throws DivergenceError unless
/// the parameters are admissible.
RegionReport region_bounds(long n, const WeightParams& p, HsOptions opt = {});
double region_majorant(int region, long n, const WeightParams& p);

// --- decay -------------------------------------------------------------

struct DecayRow {
    long n = 0;
    HsResult hs;
    std::optional<double> mirror;  // n < 0, canonical beta
};

struct DecayReport {
    std::vector<DecayRow> rows;
    /// Smallest n0 >= 0 with certified strict decrease of ||Q_n|| for all
    /// n0 <= n < n_max (resp. of ||Q_{-n}|| for n0 <= n < -n_min).
    std::optional<long> onset_positive;
    std::optional<long> onset_negative;
    bool hs_finite = false;
    bool admissible = false;
    double max_norm = 0.0;
    double max_mirror_rel_diff = 0.0;

    bool decaying() const;
};

DecayReport decay_experiment(const WeightParams& p, const BetaFunction& beta, long n_lo, long n_hi,
                             HsOptions opt = {});

// --- beta growth -------------------------------------------------------

struct BetaBound {
    double c1 = 0.0;
    double c2 = 0.0;
    long checked_range = 0;
};

/// Tight constants with c1 (|l|+1) <= |beta(l)| <= c2 (|l|+1).
BetaBound beta_bound_constants(const BetaFunction& beta, long range = 10000);
/// Whether (c1, c2) satisfies the bound on |l| <= range and in the tails.
bool beta_bound_holds(const BetaFunction& beta, double c1, double c2, long range = 10000);

}  // namespace qannulus
