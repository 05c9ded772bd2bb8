#include "qannulus/mode_ops.hpp"

#include <cmath>
#include <limits>

#include "qannulus/compensated.hpp"
#include "qannulus/errors.hpp"

namespace qannulus {

double KernelValue::value() const { return sign == 0 ? 0.0 : sign * std::exp(log_magnitude); }

TailVector apply_Dn(const TailVector& h, const ModeOperatorSpec& spec) {
    const TailVector b = spec.beta.as_vector();
    return (b.shifted(spec.n) * h - spec.x() * (b * h.shifted(1))).trimmed();
}

namespace {

// Accumulates prod beta(k) over [lo, hi] as sign parity and log magnitude.
void accumulate(const BetaFunction& beta, long lo, long hi, int& sign, double& log_mag, int dir) {
    for (long k = lo; k <= hi; ++k) {
        const double v = beta(k);
        if (v < 0.0) sign = -sign;
        log_mag += dir * std::log(std::abs(v));
    }
}

}  // namespace

KernelValue qn_kernel(const ModeOperatorSpec& spec, long l, long j) {
    if (j < l) return {};
    const long n = spec.n;
    int sign = 1;
    double lm = static_cast<double>(j - l) * spec.log_x();
    if (n >= 0) {
        accumulate(spec.beta, l, l + n - 1, sign, lm, +1);
        accumulate(spec.beta, j, j + n, sign, lm, -1);
    } else {
        accumulate(spec.beta, j + n + 1, j - 1, sign, lm, +1);
        accumulate(spec.beta, l + n, l - 1, sign, lm, -1);
    }
    return {sign, lm};
}

QnResult apply_Qn(const TailVector& g, const ModeOperatorSpec& spec, double rel_tol) {
    if (!g.finitely_supported())
        throw UnsupportedInputError("Q_n is defined on finitely supported inputs only");

    long smin = g.l_max() + 1;
    long smax = g.l_min() - 1;
    for (long l = g.l_min(); l <= g.l_max(); ++l) {
        if (g(l) != cplx{}) {
            smin = std::min(smin, l);
            smax = std::max(smax, l);
        }
    }
    if (smin > smax) return {TailVector{}, 0.0};

    const auto site = [&](long l) {
        CompensatedComplexSum s;
        for (long j = std::max(l, smin); j <= smax; ++j) {
            const KernelValue k = qn_kernel(spec, l, j);
            s.add(k.value() * g(j));
        }
        return s.value();
    };

    std::vector<cplx> vals;  // vals[i] = h(smax - i)
    double sup = 0.0;
    for (long l = smax; l >= smin; --l) {
        vals.push_back(site(l));
        sup = std::max(sup, std::abs(vals.back()));
    }

    // Below the support, h(l-1) = h(l) x beta(l-1) / beta(l+n-1); the ratio
    // is certified below 1 once deep enough in the left affine region.
    const double x = spec.x();
    double bound = std::numeric_limits<double>::infinity();
    long l = smin;
    for (;;) {
        const double rho_sq = sup_sq_ratio_left(spec.beta, l - 1, 0, spec.n);
        const double rho = x * std::sqrt(rho_sq);
        const double last = std::abs(vals.back());
        if (rho < 1.0) {
            bound = last * rho / (1.0 - rho);
            if (bound <= rel_tol * sup || last == 0.0) break;
        }
        if (smin - l > 100000) throw DivergenceError("left tail of Q_n g does not decay");
        vals.push_back(site(--l));
        sup = std::max(sup, std::abs(vals.back()));
    }

    std::vector<cplx> forward(vals.rbegin(), vals.rend());
    return {TailVector(l, std::move(forward)), bound};
}

RationalScalar exact_kernel(long n, long l, long j, const RationalScalar& x) {
    if (j < l) return RationalScalar(0);
    mpz_class num = 2;
    mpz_class den = 1;
    const auto odd = [](long k) { return mpz_class(2 * k + 1); };
    if (n >= 0) {
        for (long k = l; k <= l + n - 1; ++k) num *= odd(k);
        for (long k = j; k <= j + n; ++k) den *= odd(k);
    } else {
        for (long k = j + n + 1; k <= j - 1; ++k) num *= odd(k);
        for (long k = l + n; k <= l - 1; ++k) den *= odd(k);
    }
    return RationalScalar(num, den) * x.pow(j - l);
}

}  // namespace qannulus
