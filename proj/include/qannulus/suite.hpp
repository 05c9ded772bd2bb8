#pragma once

#include <cstdint>
#include <vector>

#include "qannulus/bounds.hpp"
#include "qannulus/full_operator.hpp"
#include "qannulus/random.hpp"

namespace qannulus::suite {

/// D_n Q_n g = g and Q_n D_n g = g on `count` seeded random finitely
/// supported g for every |n| <= n_max; one row per (n, sample, direction).
CheckTable roundtrips(const WeightParams& p, const BetaFunction& beta, long n_max, long count,
                      std::uint64_t seed, double tol = 1e-10);

/// ||D(af) - aDf - delta(a) i(f)||_{w'} relative to sup|a| ||f||_w.
CheckTable implementation_identity(const WeightParams& p, const BetaFunction& beta, long pairs,
                                   std::uint64_t seed, double tol = 1e-10);

/// Leibniz rule and rho_theta(delta(x)) = e^{i theta} delta(rho_theta(x)).
CheckTable derivation_properties(const BetaFunction& beta, long samples, std::uint64_t seed, double tol = 1e-12);

/// ||V_theta D V_theta^{-1} f - e^{i theta} D f|| for theta in thetas.
CheckTable d_covariance(const WeightParams& p, const BetaFunction& beta, const std::vector<double>& thetas,
                        long samples, std::uint64_t seed, double tol = 1e-12);

/// Involution, (xy)* = y* x*, associativity, unit.
CheckTable algebra_properties(long samples, std::uint64_t seed, double tol = 1e-12);

/// qn_kernel against exact_kernel at x = 1/2 for |n|, |l|, |j| <= r, and the
/// identity K_n(l, j) = -K_{-n-1}(-j, -l) for canonical beta, |n| <= sym_n.
CheckTable kernel_agreement(long r, long sym_n);

/// ||D(chi_N) - D(1)||_{w'} strictly decreasing and final value below
/// `final_tol`; the same in l^2_w is reported flagged.
CheckTable closure(const WeightParams& p, const BetaFunction& beta, const std::vector<long>& Ns,
                   double final_tol = 1e-6);

/// Region majorants C1..D2 and dominance for 0 <= n <= n_max. A, B and D3
/// comparisons are flagged (informational); so are the n = 0 rows of C2 and
/// D1, whose majorants do not hold there.
CheckTable regions(const WeightParams& p, long n_max);

/// beta growth constants.
CheckTable beta_growth(const BetaFunction& beta);

}  // namespace qannulus::suite
