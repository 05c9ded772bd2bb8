#pragma once

#include <map>

#include <json.hpp>

#include "qannulus/beta.hpp"
#include "qannulus/lattice.hpp"

namespace qannulus {

/// Eventually constant function Z -> C: left_const for l <= core_min,
/// right_const for l >= core_max, explicit values in between.
class CoeffFunction {
public:
    CoeffFunction() = default;
    CoeffFunction(long core_min, std::vector<cplx> values, cplx left_const, cplx right_const);
    /// Throws std::invalid_argument if v has a non-constant tail.
    explicit CoeffFunction(const TailVector& v);

    static CoeffFunction spike(long site, cplx value = 1.0);
    static CoeffFunction constant(cplx c);

    cplx left_const() const { return v_.left_tail().coeff(0); }
    cplx right_const() const { return v_.right_tail().coeff(0); }
    long core_min() const { return v_.l_min(); }
    long core_max() const { return v_.l_max(); }
    std::span<const cplx> values() const { return v_.core(); }
    const TailVector& vec() const { return v_; }
    bool is_zero() const;

    cplx operator()(long l) const { return v_(l); }

    friend bool operator==(const CoeffFunction& a, const CoeffFunction& b);

private:
    TailVector v_;
};

/// Finite Fourier sum sum_n V^n a_n(L) with eventually constant a_n.
class AlgebraElement {
public:
    using Modes = std::map<long, CoeffFunction>;

    AlgebraElement() = default;
    explicit AlgebraElement(Modes modes);

    static AlgebraElement one();
    /// V^k
    static AlgebraElement V(long k = 1);
    /// V^n a(L)
    static AlgebraElement term(long n, CoeffFunction a);

    const Modes& modes() const { return modes_; }
    bool is_zero() const { return modes_.empty(); }
    /// Coefficient of V^n (zero if absent).
    CoeffFunction coeff(long n) const;

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement& operator*=(cplx s);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(cplx s, AlgebraElement a) { return a *= s; }

private:
    void prune();
    Modes modes_;
};

/// (V^n a(L))(V^m b(L)) = V^{n+m} a(L+m) b(L)
AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);
inline AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
    return multiply(x, y);
}

/// (V^n a(L))* = V^{-n} conj(a)(L - n)
AlgebraElement adjoint(const AlgebraElement& x);

/// delta(x) = [V beta(L), x]; mode n of x feeds mode n+1 with coefficient
/// beta(l+n) a_n(l) - beta(l) a_n(l+1).
AlgebraElement derivation_delta(const AlgebraElement& x, const BetaFunction& beta);

/// Mode n multiplied by e^{i n theta}.
AlgebraElement rotate(const AlgebraElement& x, double theta);

/// Largest |coefficient| over all modes (the data scale of x).
double sup_norm(const AlgebraElement& x);
/// Largest sup-distance between matching coefficients.
double distance(const AlgebraElement& x, const AlgebraElement& y);

void to_json(nlohmann::json& j, const CoeffFunction& c);
void from_json(const nlohmann::json& j, CoeffFunction& c);
void to_json(nlohmann::json& j, const AlgebraElement& x);
void from_json(const nlohmann::json& j, AlgebraElement& x);

}  // namespace qannulus
