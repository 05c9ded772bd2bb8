#include "qannulus/beta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "qannulus/errors.hpp"

namespace qannulus {

BetaFunction BetaFunction::canonical() { return BetaFunction{}; }

BetaFunction BetaFunction::perturbed(double slope, long table_min, std::vector<double> table,
                                     double left, double right) {
    if (slope == 0.0) throw std::invalid_argument("beta slope (beta_inf) must be nonzero");
    if (table.empty()) table = {left};
    BetaFunction b;
    b.slope_ = slope;
    b.table_min_ = table_min;
    b.table_ = std::move(table);
    b.left_ = left;
    b.right_ = right;
    b.canonical_ = false;
    b.validate();
    return b;
}

BetaFunction BetaFunction::sine_perturbed(double amplitude, long half_width) {
    std::vector<double> t;
    for (long l = -half_width; l <= half_width; ++l)
        t.push_back(0.5 + amplitude * std::sin(static_cast<double>(l)));
    const double left = t.front();
    const double right = t.back();
    return perturbed(1.0, -half_width, std::move(t), left, right);
}

double BetaFunction::operator()(long k) const {
    double t;
    if (k < table_min_)
        t = left_;
    else if (k >= affine_right_start())
        t = right_;
    else
        t = table_[static_cast<std::size_t>(k - table_min_)];
    return slope_ * static_cast<double>(k) + t;
}

BetaFunction BetaFunction::scaled(double s) const {
    if (s == 0.0) throw std::invalid_argument("cannot scale beta by zero");
    BetaFunction b = *this;
    b.slope_ *= s;
    for (auto& v : b.table_) v *= s;
    b.left_ *= s;
    b.right_ *= s;
    b.canonical_ = canonical_ && s == 1.0;
    return b;
}

void BetaFunction::validate() const {
    for (long k = table_min_; k < affine_right_start(); ++k)
        if ((*this)(k) == 0.0)
            throw std::invalid_argument("beta vanishes at l = " + std::to_string(k));
    // Affine tails: slope*k + c = 0 at k = -c/slope.
    const auto root_hits = [&](double c, bool left_side) {
        const double r = -c / slope_;
        if (std::abs(r - std::round(r)) > 1e-12) return false;
        const long k = std::lround(r);
        return left_side ? k <= affine_left_end() : k >= affine_right_start();
    };
    if (root_hits(left_, true) || root_hits(right_, false))
        throw std::invalid_argument("beta vanishes in an affine tail");
}

TailVector BetaFunction::as_vector() const {
    std::vector<cplx> v;
    const long lo = std::min(table_min_, 0L);
    const long hi = std::max(affine_right_start() - 1, 0L);
    for (long k = lo; k <= hi; ++k) v.emplace_back((*this)(k));
    return TailVector(lo, std::move(v), Poly::affine(left_, slope_), Poly::affine(right_, slope_));
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// In an affine region beta(k+p)/beta(k+q) = 1 + slope (p - q) / u(k) with
// u(k) = beta(k+q) monotone in k. If |u| grows without changing sign the
// ratio moves monotonically toward 1, so its square is bounded by
// max(1, ratio(start)^2).
double monotone_bound(double at_start) { return std::max(1.0, at_start); }

}  // namespace

double sup_sq_ratio_right(const BetaFunction& beta, long from, long p, long q) {
    if (from + std::min(p, q) < beta.affine_right_start()) return kInf;
    const double u = beta(from + q);
    if (u * beta.slope() <= 0.0) return kInf;
    const double r = beta(from + p) / u;
    return monotone_bound(r * r);
}

double sup_sq_ratio_left(const BetaFunction& beta, long to, long p, long q) {
    if (to + std::max(p, q) > beta.affine_left_end()) return kInf;
    const double u = beta(to + q);
    if (u * beta.slope() >= 0.0) return kInf;
    const double r = beta(to + p) / u;
    return monotone_bound(r * r);
}

double inf_sq_right(const BetaFunction& beta, long from) {
    if (from < beta.affine_right_start()) return 0.0;
    const double u = beta(from);
    if (u * beta.slope() <= 0.0) return 0.0;
    return u * u;
}

}  // namespace qannulus
