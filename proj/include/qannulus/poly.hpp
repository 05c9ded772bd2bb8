#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace qannulus {

using cplx = std::complex<double>;

/// Polynomial in the lattice index with complex coefficients, stored lowest
/// degree first. Exactly-zero leading coefficients are trimmed, so degree()
/// reflects exact cancellation.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<cplx> coeffs);
    explicit Poly(std::vector<cplx> coeffs);

    static Poly constant(cplx c) { return Poly{c}; }
    static Poly affine(cplx c0, cplx c1) { return Poly{c0, c1}; }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<cplx>& coeffs() const { return c_; }
    cplx coeff(int k) const { return k < static_cast<int>(c_.size()) ? c_[k] : cplx{}; }

    cplx operator()(double l) const;

    /// q(l) = p(l + m)
    Poly shifted(long m) const;
    /// q(t) = p(-t)
    Poly reflected() const;
    Poly conj() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(cplx s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, cplx s) { return a *= s; }
    friend Poly operator*(cplx s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim();
    std::vector<cplx> c_;
};

}  // namespace qannulus
