#pragma once

#include "qannulus/beta.hpp"
#include "qannulus/lattice.hpp"
#include "qannulus/rational.hpp"

namespace qannulus {

/// Mode n of the implementation together with its beta and weights. The
/// mu-ratio mu(l+1)/mu(l) = e^{-gamma/2} = alpha(l)/beta(l).
struct ModeOperatorSpec {
    long n = 0;
    BetaFunction beta = BetaFunction::canonical();
    WeightParams params;

    double x() const { return params.mu_ratio(); }
    double log_x() const { return params.log_mu_ratio(); }
};

/// sign * exp(log_magnitude); sign == 0 means exactly zero.
struct KernelValue {
    int sign = 0;
    double log_magnitude = 0.0;

    double value() const;
};

/// (D_n h)(l) = beta(l+n) h(l) - beta(l) x h(l+1). Throws DegreeOverflowError
/// if the image tails would exceed the degree cap.
TailVector apply_Dn(const TailVector& h, const ModeOperatorSpec& spec);

/// Parametrix kernel K_n(l, j), zero for j < l. For n >= 0
///   K = prod_{k=l}^{l+n-1} beta(k) / prod_{k=j}^{j+n} beta(k) * x^{j-l},
/// for n < 0
///   K = prod_{k=j+n+1}^{j-1} beta(k) / prod_{k=l+n}^{l-1} beta(k) * x^{j-l}.
KernelValue qn_kernel(const ModeOperatorSpec& spec, long l, long j);

struct QnResult {
    TailVector value;  // finitely supported, on the returned window
    /// Certified bound on sum_{l < window} |(Q_n g)(l)| dropped by truncation.
    double truncation_bound = 0.0;
};

/// (Q_n g)(l) = sum_{j >= l} K_n(l, j) g(j) for finitely supported g. The
/// output is nonzero for every l below the support of g; it is extended to
/// the left until the dropped part is below rel_tol * sup|Q_n g|.
/// Throws UnsupportedInputError if g has nonzero tails.
QnResult apply_Qn(const TailVector& g, const ModeOperatorSpec& spec, double rel_tol = 1e-16);

/// Exact K_n(l, j) for canonical beta and rational mu-ratio x, using
/// 2 beta(k) = 2k + 1.
RationalScalar exact_kernel(long n, long l, long j, const RationalScalar& x);

}  // namespace qannulus
