#include "qannulus/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "qannulus/compensated.hpp"
#include "qannulus/errors.hpp"

namespace qannulus {

namespace {

constexpr double kEps = 0x1p-53;

double rate_of(const WeightParams& p, Weight kind) {
    switch (kind) {
        case Weight::w: return p.a;
        case Weight::w_prime: return p.b;
        case Weight::mu: break;
    }
    throw std::invalid_argument("weighted norms are defined for w and w' only");
}

}  // namespace

WeightParams WeightParams::make(double a, double b, double gamma) {
    if (!(a > 0.0) || !(b > 0.0) || !(gamma > 0.0))
        throw std::invalid_argument("weight rates a, b, gamma must be positive");
    return {a, b, gamma};
}

double WeightParams::mu_ratio() const { return std::exp(-0.5 * gamma); }

double log_weight(const WeightParams& p, Weight kind, long l) {
    const double dl = static_cast<double>(l);
    switch (kind) {
        case Weight::w: return -p.a * std::abs(dl);
        case Weight::w_prime: return -p.b * std::abs(dl);
        case Weight::mu: return -0.5 * p.gamma * dl;
    }
    return 0.0;
}

double weight_value(const WeightParams& p, Weight kind, long l) {
    if (l == 0) return 1.0;
    return std::exp(log_weight(p, kind, l));
}

Admissibility check_admissible(const WeightParams& p) {
    Admissibility r;
    r.hs_finite = p.gamma > p.a && p.a > p.b;
    r.sum = std::exp(-0.5 * (p.a - p.b)) + std::exp(-0.5 * (p.gamma + p.a));
    r.admissible = r.hs_finite && r.sum < 1.0;
    return r;
}

Window Window::make(long l_min, long l_max) {
    if (l_min > 0 || l_max < 0)
        throw std::invalid_argument("window [" + std::to_string(l_min) + ", " +
                                    std::to_string(l_max) + "] must contain 0");
    return {l_min, l_max};
}

// ---------------------------------------------------------------------------
// TailVector

TailVector::TailVector() : core_{cplx{}} {}

TailVector::TailVector(long first, std::vector<cplx> values, Poly left, Poly right)
    : left_(std::move(left)), right_(std::move(right)) {
    if (left_.degree() > kMaxTailDegree || right_.degree() > kMaxTailDegree)
        throw DegreeOverflowError("tail polynomial degree " +
                                  std::to_string(std::max(left_.degree(), right_.degree())) +
                                  " exceeds cap " + std::to_string(kMaxTailDegree));
    if (values.empty()) {
        // Nothing explicit: the left tail owns l <= 0, the right tail l >= 1.
        first = 0;
        values = {left_(0.0)};
    }
    l_min_ = first;
    l_max_ = first + static_cast<long>(values.size()) - 1;
    core_ = std::move(values);

    // Window must contain 0; sites between 0 and the window belong to a tail.
    if (l_min_ > 0) {
        std::vector<cplx> pre;
        for (long l = 0; l < l_min_; ++l) pre.push_back(left_(static_cast<double>(l)));
        core_.insert(core_.begin(), pre.begin(), pre.end());
        l_min_ = 0;
    }
    while (l_max_ < 0) core_.push_back(right_(static_cast<double>(++l_max_)));

    // Edge continuity: pad with one tail evaluation if an edge disagrees.
    if (core_.front() != left_(static_cast<double>(l_min_))) {
        --l_min_;
        core_.insert(core_.begin(), left_(static_cast<double>(l_min_)));
    }
    if (core_.back() != right_(static_cast<double>(l_max_))) {
        ++l_max_;
        core_.push_back(right_(static_cast<double>(l_max_)));
    }
}

TailVector TailVector::spike(long site, cplx value) { return TailVector(site, {value}); }

TailVector TailVector::constant(cplx c) {
    return TailVector(0, {c}, Poly::constant(c), Poly::constant(c));
}

int TailVector::tail_degree() const { return std::max(left_.degree(), right_.degree()); }

cplx TailVector::operator()(long l) const {
    if (l < l_min_) return left_(static_cast<double>(l));
    if (l > l_max_) return right_(static_cast<double>(l));
    return core_[static_cast<std::size_t>(l - l_min_)];
}

TailVector TailVector::shifted(long m) const {
    if (m == 0) return *this;
    return TailVector(l_min_ - m, core_, left_.shifted(m), right_.shifted(m));
}

TailVector TailVector::conj() const {
    std::vector<cplx> v(core_);
    for (auto& z : v) z = std::conj(z);
    return TailVector(l_min_, std::move(v), left_.conj(), right_.conj());
}

TailVector TailVector::expanded(long lo, long hi) const {
    lo = std::min(lo, l_min_);
    hi = std::max(hi, l_max_);
    std::vector<cplx> v;
    v.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (long l = lo; l <= hi; ++l) v.push_back((*this)(l));
    return TailVector(lo, std::move(v), left_, right_);
}

TailVector TailVector::trimmed() const {
    long lo = l_min_;
    long hi = l_max_;
    while (lo < 0 && (*this)(lo + 1) == left_(static_cast<double>(lo + 1))) ++lo;
    while (hi > 0 && (*this)(hi - 1) == right_(static_cast<double>(hi - 1))) --hi;
    if (lo == l_min_ && hi == l_max_) return *this;
    std::vector<cplx> v(core_.begin() + (lo - l_min_), core_.begin() + (hi - l_min_ + 1));
    return TailVector(lo, std::move(v), left_, right_);
}

TailVector& TailVector::operator*=(cplx s) {
    for (auto& z : core_) z *= s;
    left_ *= s;
    right_ *= s;
    // Scaling can break exact edge agreement by rounding; rebuild.
    *this = TailVector(l_min_, std::move(core_), std::move(left_), std::move(right_));
    return *this;
}

namespace {

template <class Op>
TailVector combine(const TailVector& a, const TailVector& b, Op op, Poly left, Poly right) {
    const long lo = std::min(a.l_min(), b.l_min());
    const long hi = std::max(a.l_max(), b.l_max());
    std::vector<cplx> v;
    v.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (long l = lo; l <= hi; ++l) v.push_back(op(a(l), b(l)));
    return TailVector(lo, std::move(v), std::move(left), std::move(right));
}

}  // namespace

TailVector operator+(const TailVector& a, const TailVector& b) {
    return combine(a, b, std::plus<>{}, a.left_ + b.left_, a.right_ + b.right_);
}

TailVector operator-(const TailVector& a, const TailVector& b) {
    return combine(a, b, std::minus<>{}, a.left_ - b.left_, a.right_ - b.right_);
}

TailVector operator*(const TailVector& a, const TailVector& b) {
    const Poly left = a.left_ * b.left_;
    const Poly right = a.right_ * b.right_;
    if (left.degree() > kMaxTailDegree || right.degree() > kMaxTailDegree)
        throw DegreeOverflowError("pointwise product has tail degree " +
                                  std::to_string(std::max(left.degree(), right.degree())) +
                                  " > " + std::to_string(kMaxTailDegree));
    return combine(a, b, std::multiplies<>{}, left, right);
}

// ---------------------------------------------------------------------------
// Closed-form tails
//
// For 0 < y < 1 the power sums A_i(y) = sum_{m>=0} m^i y^m follow from
// applying (y d/dy) i times to 1/(1-y):
//   A_0 = 1/(1-y)
//   A_1 = y/(1-y)^2
//   A_2 = y(1+y)/(1-y)^3
//   A_3 = y(1+4y+y^2)/(1-y)^4
//   A_4 = y(1+11y+11y^2+y^3)/(1-y)^5
// (the numerators are Eulerian polynomials). Writing t = T + m and
// r(T + m) = sum_i e_i m^i gives
//   sum_{t>=T} r(t) y^t = y^T sum_i e_i A_i(y).
// All A_i and y^T are positive, so the only cancellation is between the e_i
// terms; the error bound charges every e_i with its absolute magnitude.

ComplexEstimate poly_geometric_tail(const Poly& r, long first, double rate) {
    if (r.is_zero()) return {};
    if (r.degree() > 4) throw DegreeOverflowError("closed-form tail sums support degree <= 4");
    if (!(rate > 0.0)) throw std::invalid_argument("tail rate must be positive");

    const double y = std::exp(-rate);
    const double om = -std::expm1(-rate);  // 1 - y, accurate for small rate
    const double A[5] = {
        1.0 / om,
        y / (om * om),
        y * (1.0 + y) / (om * om * om),
        y * (1.0 + 4.0 * y + y * y) / (om * om * om * om),
        y * (1.0 + 11.0 * y + 11.0 * y * y + y * y * y) / (om * om * om * om * om),
    };
    const double yT = std::exp(-rate * static_cast<double>(first));

    const Poly e = r.shifted(first);
    // |e_i| majorants: sum_k |c_k| C(k,i) |T|^(k-i)
    const Poly abs_r = [&] {
        std::vector<cplx> c;
        for (const auto& z : r.coeffs()) c.emplace_back(std::abs(z));
        return Poly(std::move(c));
    }();
    const Poly abs_e = abs_r.shifted(std::abs(first));

    cplx acc{};
    double mag = 0.0;
    for (int i = 0; i <= e.degree(); ++i) {
        acc += e.coeff(i) * A[i];
        mag += std::abs(abs_e.coeff(i)) * A[i];
    }
    ComplexEstimate out;
    out.value = yT * acc;
    out.error = 24.0 * kEps * yT * mag;
    return out;
}

// ---------------------------------------------------------------------------
// Norms

ComplexEstimate weighted_inner(const TailVector& f, const TailVector& g, const WeightParams& p,
                               Weight kind) {
    const double rate = rate_of(p, kind);
    const long lo = std::min(f.l_min(), g.l_min());
    const long hi = std::max(f.l_max(), g.l_max());

    CompensatedComplexSum core;
    for (long l = lo; l <= hi; ++l) core.add(std::conj(f(l)) * g(l) * weight_value(p, kind, l));

    // lo <= 0 <= hi always, so the left tail lives on l <= -1 (|l| = -l) and
    // the right tail on l >= 1.
    const Poly left = (f.left_tail().conj() * g.left_tail()).reflected();
    const Poly right = f.right_tail().conj() * g.right_tail();
    const ComplexEstimate lt = poly_geometric_tail(left, 1 - lo, rate);
    const ComplexEstimate rt = poly_geometric_tail(right, hi + 1, rate);

    ComplexEstimate out;
    out.value = core.value() + lt.value + rt.value;
    // each core term: complex product + weight evaluation, a few ulps
    out.error = core.rounding_bound() + 8.0 * kEps * core.abs_sum() + lt.error + rt.error +
                4.0 * kEps * std::abs(out.value);
    return out;
}

Estimate weighted_norm_sq(const TailVector& v, const WeightParams& p, Weight kind) {
    const ComplexEstimate ip = weighted_inner(v, v, p, kind);
    return {std::max(0.0, ip.value.real()), ip.error};
}

Estimate weighted_norm(const TailVector& v, const WeightParams& p, Weight kind) {
    const Estimate sq = weighted_norm_sq(v, p, kind);
    const double n = std::sqrt(sq.value);
    // |sqrt(s + e) - sqrt(s)| <= min(e / (2 sqrt(s)), sqrt(e))
    const double err = n > 0.0 ? std::min(sq.error / (2.0 * n), std::sqrt(sq.error))
                               : std::sqrt(sq.error);
    return {n, err + kEps * n};
}

double sup_norm(const TailVector& v) {
    const auto tail_sup = [](const Poly& p) {
        if (p.degree() >= 1) return std::numeric_limits<double>::infinity();
        return std::abs(p.coeff(0));
    };
    double s = std::max(tail_sup(v.left_tail()), tail_sup(v.right_tail()));
    for (const auto& z : v.core()) s = std::max(s, std::abs(z));
    return s;
}

double sup_distance(const TailVector& f, const TailVector& g) { return sup_norm(f - g); }

}  // namespace qannulus
