#pragma once

#include <map>
#include <vector>

#include <Eigen/Dense>

#include "qannulus/algebra.hpp"
#include "qannulus/kernels.hpp"
#include "qannulus/mode_ops.hpp"

namespace qannulus {

using kernels::SiteRange;

/// f = sum_n V^n f_n(L); norm^2 = sum_n ||f_n||^2 in the chosen weight.
class FourierVector {
public:
    using Modes = std::map<long, TailVector>;

    FourierVector() = default;
    explicit FourierVector(Modes modes);
    /// The GNS image of an algebra element.
    static FourierVector from_element(const AlgebraElement& x);
    static FourierVector single(long n, TailVector v);

    const Modes& modes() const { return modes_; }
    TailVector mode(long n) const;

    FourierVector& operator+=(const FourierVector& o);
    FourierVector& operator-=(const FourierVector& o);
    friend FourierVector operator+(FourierVector a, const FourierVector& b) { return a += b; }
    friend FourierVector operator-(FourierVector a, const FourierVector& b) { return a -= b; }

private:
    Modes modes_;
};

Estimate fourier_norm(const FourierVector& f, const WeightParams& p, Weight kind);

/// Left action pi(x) f: (V^m a(L))(V^n f_n(L)) = V^{m+n} a(L+n) f_n(L).
FourierVector act(const AlgebraElement& x, const FourierVector& f);

/// Df = V beta(L) f - f V alpha(L); mode n maps to mode n+1 through D_n.
FourierVector apply_D(const FourierVector& f, const BetaFunction& beta, const WeightParams& p);

/// The intertwinner: identity on coefficient data (the weight changes from
/// w to w' when measuring).
FourierVector intertwine(const FourierVector& f);

/// V_theta: mode n multiplied by e^{i n theta}.
FourierVector rotate(const FourierVector& f, double theta);

struct Residual {
    Estimate norm;   // ||residual|| in w'
    double scale = 0.0;  // sup|a| * ||f||_w, for relative comparison

    double relative() const { return scale > 0.0 ? norm.value / scale : norm.value; }
};

/// ||D(a f) - a D(f) - delta(a) i(f)||_{w'}
Residual check_implementation_identity(const AlgebraElement& a, const FourierVector& f,
                                       const BetaFunction& beta, const WeightParams& p);

/// ||V_theta D V_theta^{-1} f - e^{i theta} D f||_{w'}
Residual check_covariance(const FourierVector& f, double theta, const BetaFunction& beta,
                          const WeightParams& p);

/// Block-diagonal compression over modes. Block k maps source mode
/// modes[k] to target mode modes[k] + mode_shift.
struct TruncatedOperator {
    SiteRange sites;
    std::vector<long> modes;
    long mode_shift = 0;
    std::vector<Eigen::MatrixXd> blocks;

    long rows() const { return static_cast<long>(modes.size()) * sites.size(); }
    Eigen::MatrixXd dense() const;
};

/// Throws SizeError if the compression exceeds max_dense_sites sites per block.
inline constexpr long kMaxDenseSites = 2001;

TruncatedOperator assemble_D_matrix(SiteRange sites, long n_lo, long n_hi, const BetaFunction& beta,
                                    const WeightParams& p);
TruncatedOperator assemble_Q_matrix(SiteRange sites, long n_lo, long n_hi, const BetaFunction& beta,
                                    const WeightParams& p);

/// Singular values, descending. Computed per block and merged.
std::vector<double> singular_values(const TruncatedOperator& T);
/// Eigenvalues of [[0, T], [T*, 0]], ascending. The assembly of a
/// block-diagonal T is a direct sum of the per-block assemblies, so each is
/// diagonalised separately.
std::vector<double> block_dirac_spectrum(const TruncatedOperator& T);
std::vector<double> singular_values(const Eigen::MatrixXd& M);
std::vector<double> block_dirac_spectrum(const Eigen::MatrixXd& M);

struct ClosureRow {
    long N = 0;
    Estimate w_prime;  // ||D(chi_N) - D(1)|| in w'
    Estimate w;        // same difference measured in w
};

/// chi_N is the indicator of |l| <= N in mode 0.
std::vector<ClosureRow> closure_approx_check(const std::vector<long>& Ns, const BetaFunction& beta,
                                             const WeightParams& p);

}  // namespace qannulus
