#include <doctest.h>

#include <cmath>

#include "qannulus/errors.hpp"
#include "qannulus/lattice.hpp"

using namespace qannulus;

TEST_CASE("admissibility examples") {
    const Admissibility d = check_admissible(WeightParams::make(2, 1, 3));
    CHECK(d.hs_finite);
    CHECK(d.admissible);
    CHECK(d.sum == doctest::Approx(std::exp(-0.5) + std::exp(-2.5)).epsilon(1e-15));
    CHECK(d.sum == doctest::Approx(0.68861).epsilon(1e-4));

    const Admissibility e = check_admissible(WeightParams::make(1, 0.9, 2));
    CHECK(e.hs_finite);
    CHECK_FALSE(e.admissible);
    CHECK(e.sum == doctest::Approx(1.17436).epsilon(1e-5));

    CHECK_FALSE(check_admissible(WeightParams::make(2, 1, 1.5)).hs_finite);
    CHECK_THROWS_AS(WeightParams::make(0, 1, 1), std::invalid_argument);
}

TEST_CASE("weight values") {
    const WeightParams p = WeightParams::make(2, 1, 2 * std::log(2.0));
    CHECK(weight_value(p, Weight::w, 2) == doctest::Approx(std::exp(-4.0)).epsilon(1e-15));
    CHECK(weight_value(p, Weight::w, -2) == weight_value(p, Weight::w, 2));
    CHECK(weight_value(p, Weight::mu, -1) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(weight_value(p, Weight::w_prime, 0) == 1.0);
}

TEST_CASE("weighted norms") {
    const WeightParams p = WeightParams::make(2, 1, 3);
    const TailVector s = TailVector::spike(1);
    CHECK(weighted_norm(s, p, Weight::w).value == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(weighted_norm(s, p, Weight::w_prime).value == doctest::Approx(std::exp(-0.5)).epsilon(1e-15));

    std::vector<cplx> v;
    for (long l = 0; l < 80; ++l) v.emplace_back(std::exp(-static_cast<double>(l)));
    const TailVector g(0, v);
    const double want = 1.0 / (1.0 - std::exp(-4.0));
    const Estimate n2 = weighted_norm_sq(g, p, Weight::w);
    CHECK(std::abs(n2.value - want) <= 1e-14);
    CHECK(n2.error < 1e-14);
}

TEST_CASE("polynomial tails against brute force") {
    const WeightParams p = WeightParams::make(0.5, 0.25, 1);
    const TailVector v(-2, {1.0, cplx(0, 2), -1.0}, Poly::affine(1.0, 0.5), Poly{0.25, -1.0, 0.5});
    double brute = 0.0;
    for (long l = -4000; l <= 4000; ++l) brute += std::norm(v(l)) * weight_value(p, Weight::w, l);
    const Estimate n2 = weighted_norm_sq(v, p, Weight::w);
    CHECK(std::abs(n2.value - brute) <= 1e-11 * brute);
}

TEST_CASE("tail vector invariants") {
    const TailVector v(3, {1.0, 2.0}, Poly::constant(5.0), Poly::constant(7.0));
    CHECK(v.l_min() <= 0);
    CHECK(v.l_max() >= 0);
    CHECK(v(-100) == cplx(5.0));
    CHECK(v(100) == cplx(7.0));
    CHECK(v(3) == cplx(1.0));
    CHECK(v(4) == cplx(2.0));
    CHECK(v.shifted(2)(1) == v(3));
    CHECK(v.expanded(-10, 10)(7) == v(7));
    CHECK(v.trimmed()(-50) == v(-50));
    CHECK_THROWS_AS(TailVector(0, {1.0}, Poly{0, 0, 0, 1}), DegreeOverflowError);
    CHECK_THROWS_AS(TailVector(0, {1.0}, Poly::affine(0, 1)) * TailVector(0, {1.0}, Poly{0, 0, 1}), DegreeOverflowError);
    CHECK_THROWS_AS(Window::make(1, 3), std::invalid_argument);
}

TEST_CASE("Cauchy-Schwarz") {
    const WeightParams p = WeightParams::make(2, 1, 3);
    const TailVector f(-3, {1.0, cplx(0.5, -1), 2.0, 0.0, -1.0}, Poly::constant(0.3), Poly::affine(1, -0.2));
    const TailVector g(-1, {cplx(0, 1), 3.0}, Poly{}, Poly::constant(-2.0));
    const double ip = std::abs(weighted_inner(f, g, p, Weight::w).value);
    const double nn = weighted_norm(f, p, Weight::w).value * weighted_norm(g, p, Weight::w).value;
    CHECK(ip <= nn * (1 + 1e-14));
}

TEST_CASE("norm is stable under window growth") {
    const WeightParams p = WeightParams::make(1, 0.5, 2);
    const TailVector v(-2, {1.0, -2.0, 0.5}, Poly::affine(0.0, 1.0), Poly::constant(3.0));
    const double n0 = weighted_norm(v, p, Weight::w_prime).value;
    for (long W : {10L, 20L, 40L, 80L}) CHECK(std::abs(weighted_norm(v.expanded(-W, W), p, Weight::w_prime).value - n0) <= 1e-13 * n0);
}
