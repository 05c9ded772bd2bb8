#include <doctest.h>

#include <cmath>

#include "qannulus/errors.hpp"
#include "qannulus/mode_ops.hpp"
#include "qannulus/random.hpp"

using namespace qannulus;

namespace {

ModeOperatorSpec spec(long n) { return {n, BetaFunction::canonical(), WeightParams::make(2, 1, 3)}; }

}  // namespace

TEST_CASE("D_n on a spike") {
    const auto s = spec(0);
    const double x = s.x();
    const TailVector out = apply_Dn(TailVector::spike(0), s);
    CHECK(out(0).real() == doctest::Approx(0.5).epsilon(1e-16));
    CHECK(out(-1).real() == doctest::Approx(x / 2).epsilon(1e-15));
    for (long l : {-3L, -2L, 1L, 2L}) CHECK(out(l) == cplx(0.0));
}

TEST_CASE("D_1 on a constant") {
    const auto s = spec(1);
    const TailVector out = apply_Dn(TailVector::constant(1.0), s);
    const BetaFunction& b = s.beta;
    for (long l = -30; l <= 30; ++l) CHECK(std::abs(out(l) - (b(l + 1) - s.x() * b(l))) <= 1e-13 * (1 + std::abs(l)));
    CHECK(out.tail_degree() == 1);
}

TEST_CASE("kernel values") {
    const auto s = spec(0);
    const KernelValue k00 = qn_kernel(s, 0, 0);
    CHECK(k00.sign == 1);
    CHECK(k00.value() == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(qn_kernel(s, 0, 1).value() == doctest::Approx(2.0 / 3.0 * s.x()).epsilon(1e-15));
    for (long n : {-3L, 0L, 4L}) CHECK(qn_kernel(spec(n), 3, 2).sign == 0);
}

TEST_CASE("exact kernel at x = 1/2") {
    const RationalScalar h(1, 2);
    CHECK(exact_kernel(0, 0, 0, h) == RationalScalar(2));
    CHECK(exact_kernel(0, 0, 1, h) == RationalScalar(1, 3));
    CHECK(exact_kernel(1, 0, 0, h) == RationalScalar(2, 3));
    CHECK(exact_kernel(2, 5, 4, h) == RationalScalar(0));

    const ModeOperatorSpec s{0, BetaFunction::canonical(), WeightParams::make(2, 1, 2 * std::log(2.0))};
    for (long n = -6; n <= 6; ++n)
        for (long l = -8; l <= 8; ++l)
            for (long j = l; j <= l + 8; ++j) {
                ModeOperatorSpec sn = s;
                sn.n = n;
                const RationalScalar e = exact_kernel(n, l, j, h);
                const KernelValue k = qn_kernel(sn, l, j);
                REQUIRE(k.sign == e.sign());
                if (k.sign != 0) CHECK(std::abs(k.log_magnitude - e.log_abs()) <= 1e-13 * (1 + std::abs(e.log_abs())));
            }
}

TEST_CASE("Q_0 on a spike") {
    const auto s = spec(0);
    const QnResult q = apply_Qn(TailVector::spike(0), s);
    for (long l = -20; l <= 0; ++l) CHECK(std::abs(q.value(l) - 2.0 * std::pow(s.x(), -l)) <= 1e-15 * 2.0);
    for (long l = 1; l <= 5; ++l) CHECK(q.value(l) == cplx(0.0));
    CHECK(q.truncation_bound <= 1e-15);
    const TailVector back = apply_Dn(q.value, s);
    CHECK(sup_distance(back, TailVector::spike(0)) <= 1e-14);
}

TEST_CASE("roundtrips on random finite vectors") {
    Rng rng(5);
    for (long n = -6; n <= 6; ++n) {
        const auto s = spec(n);
        for (int k = 0; k < 10; ++k) {
            const TailVector g = random_finite_vector(rng, rng.integer(-4, 4), rng.integer(1, 8));
            CHECK(sup_distance(apply_Dn(apply_Qn(g, s).value, s), g) <= 1e-10 * sup_norm(g));
            CHECK(sup_distance(apply_Qn(apply_Dn(g, s), s).value, g) <= 1e-10 * sup_norm(g));
        }
    }
}

TEST_CASE("Q_n needs finite support") {
    CHECK_THROWS_AS(apply_Qn(TailVector::constant(1.0), spec(0)), UnsupportedInputError);
}
