#pragma once

#include <vector>

#include "qannulus/lattice.hpp"

namespace qannulus {

/// beta(l) = slope * l + t(l) with t eventually constant. The canonical
/// choice is slope 1, t = 1/2, i.e. beta(l) = l + 1/2.
///
/// beta is affine (exactly slope * l + const) for l <= affine_left_end() and
/// for l >= affine_right_start(). Construction rejects any beta with a zero.
class BetaFunction {
public:
    static BetaFunction canonical();
    /// t(l) = table[l - table_min] on the table range, left/right outside it.
    static BetaFunction perturbed(double slope, long table_min, std::vector<double> table,
                                  double left, double right);
    /// beta(l) = l + 1/2 + amplitude * sin(l) for |l| <= half_width, frozen
    /// at the edge values beyond.
    static BetaFunction sine_perturbed(double amplitude, long half_width);

    double operator()(long k) const;
    double slope() const { return slope_; }
    bool is_canonical() const { return canonical_; }

    long affine_left_end() const { return table_min_ - 1; }
    long affine_right_start() const { return table_min_ + static_cast<long>(table_.size()); }
    double left_intercept() const { return left_; }
    double right_intercept() const { return right_; }
    long table_min() const { return table_min_; }
    const std::vector<double>& table() const { return table_; }

    BetaFunction scaled(double s) const;

    /// beta as a lattice vector with affine tails.
    TailVector as_vector() const;

private:
    BetaFunction() = default;
    void validate() const;

    double slope_ = 1.0;
    long table_min_ = 0;
    std::vector<double> table_{0.5};
    double left_ = 0.5;
    double right_ = 0.5;
    bool canonical_ = true;
};

/// sup over k >= from of (beta(k + p) / beta(k + q))^2, using monotonicity in
/// the affine region. Returns +inf when `from` is not deep enough in the
/// affine region for the argument to hold.
double sup_sq_ratio_right(const BetaFunction& beta, long from, long p, long q);
/// sup over k <= to of (beta(k + p) / beta(k + q))^2.
double sup_sq_ratio_left(const BetaFunction& beta, long to, long p, long q);
/// inf over k >= from of beta(k)^2 (+0 when not certifiable).
double inf_sq_right(const BetaFunction& beta, long from);

}  // namespace qannulus
