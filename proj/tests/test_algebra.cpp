#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qannulus/algebra.hpp"
#include "qannulus/random.hpp"
#include "qannulus/rational.hpp"

using namespace qannulus;

namespace {

bool same(const AlgebraElement& x, const AlgebraElement& y, double tol = 0.0) { return distance(x, y) <= tol; }

}  // namespace

TEST_CASE("V times V") {
    const AlgebraElement v2 = AlgebraElement::V() * AlgebraElement::V();
    CHECK(same(v2, AlgebraElement::V(2)));
    CHECK(same(AlgebraElement::V(-1) * AlgebraElement::V(), AlgebraElement::one()));
}

TEST_CASE("a(L) V = V a(L+1)") {
    const AlgebraElement a = AlgebraElement::term(0, CoeffFunction::spike(0));
    const AlgebraElement x = a * AlgebraElement::V();
    REQUIRE(x.modes().size() == 1);
    REQUIRE(x.modes().count(1) == 1);
    const CoeffFunction c = x.coeff(1);
    CHECK(c(-1) == cplx(1.0));
    CHECK(c(0) == cplx(0.0));
    CHECK(c(-2) == cplx(0.0));
}

TEST_CASE("adjoint") {
    const AlgebraElement x = AlgebraElement::V() * AlgebraElement::term(0, CoeffFunction::spike(0));
    const AlgebraElement s = adjoint(x);
    REQUIRE(s.modes().count(-1) == 1);
    CHECK(s.coeff(-1)(1) == cplx(1.0));
    CHECK(s.coeff(-1)(0) == cplx(0.0));
    CHECK(same(adjoint(s), x));
}

TEST_CASE("delta of V and of a spike") {
    const BetaFunction beta = BetaFunction::canonical();
    const AlgebraElement dv = derivation_delta(AlgebraElement::V(), beta);
    CHECK(same(dv, AlgebraElement::term(2, CoeffFunction::constant(1.0))));

    const AlgebraElement ds = derivation_delta(AlgebraElement::term(0, CoeffFunction::spike(0)), beta);
    REQUIRE(ds.modes().size() == 1);
    const CoeffFunction c = ds.coeff(1);
    CHECK(c(0) == cplx(0.5));
    CHECK(c(-1) == cplx(0.5));
    for (long l : {-5L, -2L, 1L, 2L, 7L}) CHECK(c(l) == cplx(0.0));
    CHECK(c.left_const() == cplx(0.0));
    CHECK(c.right_const() == cplx(0.0));
}

TEST_CASE("rotation") {
    const double th = 0.7;
    const AlgebraElement a = AlgebraElement::term(0, CoeffFunction(-1, {1.0, 2.0}, 3.0, -1.0));
    CHECK(same(rotate(a, th), a));
    CHECK(same(rotate(AlgebraElement::V(), th), std::polar(1.0, th) * AlgebraElement::V(), 1e-16));
}

TEST_CASE("random algebra laws") {
    Rng rng(11);
    for (int s = 0; s < 30; ++s) {
        const AlgebraElement x = random_element(rng);
        const AlgebraElement y = random_element(rng);
        const AlgebraElement z = random_element(rng);
        CHECK(distance(adjoint(x * y), adjoint(y) * adjoint(x)) <= 1e-13);
        CHECK(distance((x * y) * z, x * (y * z)) <= 1e-12);
        CHECK(same(adjoint(adjoint(x)), x));
        const BetaFunction beta = BetaFunction::canonical();
        const AlgebraElement lhs = derivation_delta(x * y, beta);
        const AlgebraElement rhs = derivation_delta(x, beta) * y + x * derivation_delta(y, beta);
        CHECK(distance(lhs, rhs) <= 1e-11 * std::max(1.0, sup_norm(lhs)));
    }
}

TEST_CASE("json roundtrip") {
    Rng rng(3);
    for (int s = 0; s < 10; ++s) {
        const AlgebraElement x = random_element(rng);
        const nlohmann::json j = x;
        const AlgebraElement back = nlohmann::json::parse(j.dump()).get<AlgebraElement>();
        CHECK(same(back, x));
    }
}

TEST_CASE("rational scalars and binomials") {
    const RationalScalar h(1, 2);
    CHECK((h + h) == RationalScalar(1));
    CHECK((h * RationalScalar(2, 3)) == RationalScalar(1, 3));
    CHECK(h.pow(-2) == RationalScalar(4));
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(3, 4) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(RationalScalar(mpz_class("1000000000000000000000000")).log_abs() == doctest::Approx(24 * std::log(10.0)));
}
