#pragma once

#include <gmpxx.h>

#include <string>

namespace qannulus {

/// Exact rational in canonical form (reduced, positive denominator).
class RationalScalar {
public:
    RationalScalar() = default;
    RationalScalar(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    RationalScalar(long num, long den);
    explicit RationalScalar(mpz_class v) : q_(std::move(v)) {}
    RationalScalar(mpz_class num, mpz_class den);
    explicit RationalScalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    const mpq_class& raw() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    int sign() const { return sgn(q_); }
    double to_double() const { return q_.get_d(); }
    /// log|q| computed from the big integers without overflow; -inf for 0.
    double log_abs() const;
    std::string str() const { return q_.get_str(); }

    RationalScalar pow(long e) const;
    RationalScalar abs() const { return RationalScalar(mpq_class(::abs(q_))); }

    friend RationalScalar operator+(const RationalScalar& a, const RationalScalar& b) {
        return RationalScalar(mpq_class(a.q_ + b.q_));
    }
    friend RationalScalar operator-(const RationalScalar& a, const RationalScalar& b) {
        return RationalScalar(mpq_class(a.q_ - b.q_));
    }
    friend RationalScalar operator*(const RationalScalar& a, const RationalScalar& b) {
        return RationalScalar(mpq_class(a.q_ * b.q_));
    }
    friend RationalScalar operator/(const RationalScalar& a, const RationalScalar& b);
    friend bool operator==(const RationalScalar& a, const RationalScalar& b) { return a.q_ == b.q_; }
    friend auto operator<=>(const RationalScalar& a, const RationalScalar& b) {
        return cmp(a.q_, b.q_) <=> 0;
    }

private:
    mpq_class q_{0};
};

/// Binomial coefficient with C(n, 0) = 1 for every n and C(n, k) = 0 for
/// k < 0 or 0 <= n < k.
mpz_class binomial(long n, long k);

}  // namespace qannulus
