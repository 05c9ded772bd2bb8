#include "qannulus/full_operator.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "qannulus/errors.hpp"

namespace qannulus {

namespace {

bool is_zero(const TailVector& v) {
    if (!v.finitely_supported()) return false;
    return std::all_of(v.core().begin(), v.core().end(), [](cplx z) { return z == cplx{}; });
}

}  // namespace

FourierVector::FourierVector(Modes modes) : modes_(std::move(modes)) {
    std::erase_if(modes_, [](const auto& kv) { return is_zero(kv.second); });
}

FourierVector FourierVector::from_element(const AlgebraElement& x) {
    Modes m;
    for (const auto& [n, a] : x.modes()) m.emplace(n, a.vec());
    return FourierVector(std::move(m));
}

FourierVector FourierVector::single(long n, TailVector v) {
    Modes m;
    m.emplace(n, std::move(v));
    return FourierVector(std::move(m));
}

TailVector FourierVector::mode(long n) const {
    const auto it = modes_.find(n);
    return it == modes_.end() ? TailVector{} : it->second;
}

FourierVector& FourierVector::operator+=(const FourierVector& o) {
    for (const auto& [n, v] : o.modes_) {
        auto it = modes_.find(n);
        if (it == modes_.end())
            modes_.emplace(n, v);
        else
            it->second = (it->second + v).trimmed();
    }
    std::erase_if(modes_, [](const auto& kv) { return is_zero(kv.second); });
    return *this;
}

FourierVector& FourierVector::operator-=(const FourierVector& o) {
    Modes neg;
    for (const auto& [n, v] : o.modes_) neg.emplace(n, -1.0 * v);
    return *this += FourierVector(std::move(neg));
}

Estimate fourier_norm(const FourierVector& f, const WeightParams& p, Weight kind) {
    Estimate sq;
    for (const auto& [n, v] : f.modes()) {
        const Estimate e = weighted_norm_sq(v, p, kind);
        sq.value += e.value;
        sq.error += e.error;
    }
    const double r = std::sqrt(sq.value);
    const double err = r > 0.0 ? std::min(sq.error / (2.0 * r), std::sqrt(sq.error)) : std::sqrt(sq.error);
    return {r, err};
}

FourierVector act(const AlgebraElement& x, const FourierVector& f) {
    FourierVector out;
    for (const auto& [m, a] : x.modes())
        for (const auto& [n, v] : f.modes())
            out += FourierVector::single(m + n, (a.vec().shifted(n) * v).trimmed());
    return out;
}

FourierVector apply_D(const FourierVector& f, const BetaFunction& beta, const WeightParams& p) {
    FourierVector::Modes out;
    for (const auto& [n, v] : f.modes()) out.emplace(n + 1, apply_Dn(v, {n, beta, p}));
    return FourierVector(std::move(out));
}

FourierVector intertwine(const FourierVector& f) { return f; }

FourierVector rotate(const FourierVector& f, double theta) {
    FourierVector::Modes out;
    for (const auto& [n, v] : f.modes())
        out.emplace(n, n == 0 ? v : std::polar(1.0, static_cast<double>(n) * theta) * v);
    return FourierVector(std::move(out));
}

Residual check_implementation_identity(const AlgebraElement& a, const FourierVector& f,
                                       const BetaFunction& beta, const WeightParams& p) {
    const FourierVector lhs = apply_D(act(a, f), beta, p);
    const FourierVector r = lhs - act(a, apply_D(f, beta, p)) - act(derivation_delta(a, beta), intertwine(f));
    return {fourier_norm(r, p, Weight::w_prime), sup_norm(a) * fourier_norm(f, p, Weight::w).value};
}

Residual check_covariance(const FourierVector& f, double theta, const BetaFunction& beta,
                          const WeightParams& p) {
    const FourierVector lhs = rotate(apply_D(rotate(f, -theta), beta, p), theta);
    FourierVector::Modes scaled;
    const FourierVector df = apply_D(f, beta, p);
    for (const auto& [n, v] : df.modes()) scaled.emplace(n, std::polar(1.0, theta) * v);
    const FourierVector r = lhs - FourierVector(std::move(scaled));
    return {fourier_norm(r, p, Weight::w_prime), fourier_norm(f, p, Weight::w).value};
}

// ---------------------------------------------------------------------------

Eigen::MatrixXd TruncatedOperator::dense() const {
    const long N = rows();
    const long s = sites.size();
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(N, N);
    for (std::size_t k = 0; k < blocks.size(); ++k)
        M.block(static_cast<long>(k) * s, static_cast<long>(k) * s, s, s) = blocks[k];
    return M;
}

namespace {

TruncatedOperator assemble(SiteRange sites, long n_lo, long n_hi, const BetaFunction& beta,
                           const WeightParams& p, long shift,
                           Eigen::MatrixXd (*block)(const ModeOperatorSpec&, SiteRange)) {
    if (sites.size() > kMaxDenseSites)
        throw SizeError("window of " + std::to_string(sites.size()) +
                        " sites is too large for dense SVD; use at most " + std::to_string(kMaxDenseSites));
    TruncatedOperator T;
    T.sites = sites;
    T.mode_shift = shift;
    for (long n = n_lo; n <= n_hi; ++n) {
        T.modes.push_back(n);
        T.blocks.push_back(block({n, beta, p}, sites));
    }
    return T;
}

}  // namespace

TruncatedOperator assemble_D_matrix(SiteRange sites, long n_lo, long n_hi, const BetaFunction& beta,
                                    const WeightParams& p) {
    return assemble(sites, n_lo, n_hi, beta, p, 1, &kernels::d_block);
}

TruncatedOperator assemble_Q_matrix(SiteRange sites, long n_lo, long n_hi, const BetaFunction& beta,
                                    const WeightParams& p) {
    return assemble(sites, n_lo, n_hi, beta, p, -1, &kernels::q_block);
}

std::vector<double> singular_values(const Eigen::MatrixXd& M) {
    if (M.size() == 0) return {};
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    const Eigen::VectorXd s = svd.singularValues();
    return {s.data(), s.data() + s.size()};
}

std::vector<double> block_dirac_spectrum(const Eigen::MatrixXd& M) {
    const long r = M.rows();
    const long c = M.cols();
    if (r + c == 0) return {};
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(r + c, r + c);
    H.topRightCorner(r, c) = M;
    H.bottomLeftCorner(c, r) = M.transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd e = es.eigenvalues();
    return {e.data(), e.data() + e.size()};
}

std::vector<double> singular_values(const TruncatedOperator& T) {
    const auto per = kernels::ordered_map(static_cast<long>(T.blocks.size()),
                                          [&](long k) { return singular_values(T.blocks[k]); });
    std::vector<double> out;
    for (const auto& v : per) out.insert(out.end(), v.begin(), v.end());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<double> block_dirac_spectrum(const TruncatedOperator& T) {
    const auto per = kernels::ordered_map(static_cast<long>(T.blocks.size()),
                                          [&](long k) { return block_dirac_spectrum(T.blocks[k]); });
    std::vector<double> out;
    for (const auto& v : per) out.insert(out.end(), v.begin(), v.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ClosureRow> closure_approx_check(const std::vector<long>& Ns, const BetaFunction& beta,
                                             const WeightParams& p) {
    const FourierVector d_one = apply_D(FourierVector::single(0, TailVector::constant(1.0)), beta, p);
    std::vector<ClosureRow> out;
    for (const long N : Ns) {
        const TailVector chi(-N, std::vector<cplx>(static_cast<std::size_t>(2 * N + 1), 1.0));
        const FourierVector diff = apply_D(FourierVector::single(0, chi), beta, p) - d_one;
        out.push_back({N, fourier_norm(diff, p, Weight::w_prime), fourier_norm(diff, p, Weight::w)});
    }
    return out;
}

}  // namespace qannulus
