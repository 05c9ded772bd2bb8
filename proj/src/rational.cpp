#include "qannulus/rational.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qannulus/errors.hpp"

namespace qannulus {

RationalScalar::RationalScalar(long num, long den) : q_(num, den) {
    if (den == 0) throw std::domain_error("zero denominator");
    q_.canonicalize();
}

RationalScalar::RationalScalar(mpz_class num, mpz_class den) : q_(num, den) {
    if (den == 0) throw std::domain_error("zero denominator");
    q_.canonicalize();
}

RationalScalar operator/(const RationalScalar& a, const RationalScalar& b) {
    if (b.q_ == 0) throw std::domain_error("division by zero rational");
    return RationalScalar(mpq_class(a.q_ / b.q_));
}

namespace {

double log_abs_z(const mpz_class& z) {
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return std::log(std::abs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace

double RationalScalar::log_abs() const {
    if (q_ == 0) return -std::numeric_limits<double>::infinity();
    return log_abs_z(q_.get_num()) - log_abs_z(q_.get_den());
}

RationalScalar RationalScalar::pow(long e) const {
    if (e < 0) return RationalScalar(1) / pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return RationalScalar(n, d);
}

mpz_class binomial(long n, long k) {
    if (k == 0) return 1;
    if (k < 0) return 0;
    if (n < 0) throw DomainError("binomial with negative top and positive bottom");
    if (k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace qannulus
