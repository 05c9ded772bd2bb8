#pragma once

#include <complex>
#include <span>
#include <vector>

#include "qannulus/poly.hpp"

namespace qannulus {

/// Exponential weight rates: w(l) = e^{-a|l|}, w'(l) = e^{-b|l|},
/// mu(l) = e^{-gamma l / 2}.
struct WeightParams {
    double a = 2.0;
    double b = 1.0;
    double gamma = 3.0;

    /// Throws std::invalid_argument unless all three rates are positive.
    static WeightParams make(double a, double b, double gamma);

    /// mu(l+1)/mu(l) = e^{-gamma/2}
    double mu_ratio() const;
    double log_mu_ratio() const { return -0.5 * gamma; }
};

enum class Weight { w, w_prime, mu };

double weight_value(const WeightParams& p, Weight kind, long l);
/// Natural log of weight_value, exact in the rates (no exp/log round trip).
double log_weight(const WeightParams& p, Weight kind, long l);

struct Admissibility {
    bool hs_finite = false;   // gamma > a > b
    bool admissible = false;  // hs_finite and sum < 1
    double sum = 0.0;         // e^{-(a-b)/2} + e^{-(gamma+a)/2}
};

Admissibility check_admissible(const WeightParams& p);

/// Finite lattice window [l_min, l_max]; always contains the site 0.
struct Window {
    long l_min = 0;
    long l_max = 0;

    static Window make(long l_min, long l_max);
    long size() const { return l_max - l_min + 1; }
    bool contains(long l) const { return l_min <= l && l <= l_max; }
};

inline constexpr int kMaxTailDegree = 2;

/// Two-sided sequence given by explicit values on a window and polynomial
/// tails outside it. The left tail describes every l <= l_min and the right
/// tail every l >= l_max; the window edge values agree with the tails.
class TailVector {
public:
    /// The zero vector.
    TailVector();

    /// Builds from values on [first, first + values.size()). The window is
    /// padded as needed so that it contains 0 and the edges agree with the
    /// tails. Throws DegreeOverflowError if a tail has degree > kMaxTailDegree.
    TailVector(long first, std::vector<cplx> values, Poly left = {}, Poly right = {});

    static TailVector spike(long site, cplx value = 1.0);
    static TailVector constant(cplx c);

    Window window() const { return {l_min_, l_max_}; }
    long l_min() const { return l_min_; }
    long l_max() const { return l_max_; }
    std::span<const cplx> core() const { return core_; }
    const Poly& left_tail() const { return left_; }
    const Poly& right_tail() const { return right_; }
    int tail_degree() const;
    bool finitely_supported() const { return left_.is_zero() && right_.is_zero(); }

    cplx operator()(long l) const;

    /// v'(l) = v(l + m)
    TailVector shifted(long m) const;
    TailVector conj() const;
    /// Same sequence with the window grown to cover [lo, hi].
    TailVector expanded(long lo, long hi) const;
    /// Same sequence on the smallest window the representation allows.
    TailVector trimmed() const;

    TailVector& operator*=(cplx s);
    friend TailVector operator*(cplx s, TailVector v) { return v *= s; }
    friend TailVector operator+(const TailVector& a, const TailVector& b);
    friend TailVector operator-(const TailVector& a, const TailVector& b);
    /// Pointwise product; tail degrees add.
    friend TailVector operator*(const TailVector& a, const TailVector& b);

private:
    long l_min_ = 0;
    long l_max_ = 0;
    std::vector<cplx> core_;
    Poly left_;
    Poly right_;
};

/// A computed quantity with an absolute rounding-error bound.
struct Estimate {
    double value = 0.0;
    double error = 0.0;
};

struct ComplexEstimate {
    cplx value{};
    double error = 0.0;
};

/// <f, g>_kind = sum_l conj(f(l)) g(l) weight(l); kind must be w or w'.
/// The window part is Kahan-summed in increasing l; tails are summed in
/// closed form.
ComplexEstimate weighted_inner(const TailVector& f, const TailVector& g, const WeightParams& p,
                               Weight kind);
Estimate weighted_norm_sq(const TailVector& v, const WeightParams& p, Weight kind);
Estimate weighted_norm(const TailVector& v, const WeightParams& p, Weight kind);

/// sum_{t >= first} r(t) e^{-rate t} for deg r <= 4, rate > 0.
ComplexEstimate poly_geometric_tail(const Poly& r, long first, double rate);

/// sup_l |f(l) - g(l)|; +inf when the difference has a non-constant tail.
double sup_distance(const TailVector& f, const TailVector& g);
double sup_norm(const TailVector& v);

}  // namespace qannulus
