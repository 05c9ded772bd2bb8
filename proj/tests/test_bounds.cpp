#include <doctest.h>

#include <cmath>
#include <string>

#include "qannulus/bounds.hpp"
#include "qannulus/errors.hpp"

using namespace qannulus;

namespace {

const WeightParams kP = WeightParams::make(2, 1, 3);

// Direct double sum of K_0(l, j)^2 e^{-2|l|} e^{|j|} for canonical beta.
double hs0_direct(long M) {
    const double x2 = std::exp(-3.0);
    double s = 0.0;
    for (long l = -M; l <= M; ++l)
        for (long j = l; j <= M; ++j) {
            const double bj = j + 0.5;
            s += std::pow(x2, j - l) * std::exp(-2.0 * std::abs(l) + std::abs(j)) / (bj * bj);
        }
    return s;
}

}  // namespace

TEST_CASE("q_n values") {
    CHECK(qn_ratio(3, 0) == RationalScalar(1));
    CHECK(qn_ratio(3, 3) == RationalScalar(1));
    CHECK(qn_ratio(3, 1) == RationalScalar(25));
    CHECK(qn_ratio(3, 2) == RationalScalar(25));
    for (long n = 0; n <= 12; ++n)
        for (long l = 0; l <= n; ++l) CHECK(qn_ratio_product(n, l) == qn_ratio_closed(n, l));
    CHECK(qn_ratio(3, 1) <= RationalScalar(2) * RationalScalar(binomial(6, 2)));
}

TEST_CASE("estimate 3 proof form fails at l = n") {
    // q_2(1) / q_2(2) = 9 > C(4, 2) = 6
    CHECK(qn_ratio(2, 1) == RationalScalar(9));
    CHECK(RationalScalar(binomial(4, 2)) < qn_ratio(2, 1) / qn_ratio(2, 2));
}

TEST_CASE("I_m values") {
    const RationalScalar h(1, 2);
    CHECK(I_m_closed(0, 3, h) == RationalScalar(2));
    CHECK(I_m_closed(1, 1, h) == RationalScalar(8));
    CHECK(I_m_recursive(1, 1, h) == RationalScalar(8));
    CHECK(I_m_majorant(1, 1, h) == RationalScalar(12));
    CHECK(h * I_m_closed(1, 1, h) - I_m_closed(0, 1, h) == RationalScalar(2));
    const Estimate s = I_m_series(1, 1, 0.5);
    CHECK(std::abs(s.value - 8.0) <= s.error + 1e-14);
    CHECK(I_m_closed(3, 2, 0.5) == doctest::Approx(I_m_closed(3, 2, h).to_double()).epsilon(1e-14));
}

TEST_CASE("J_n values") {
    for (double x : {0.5, std::exp(-1.5)})
        for (long j : {0L, 3L, 10L}) {
            const Estimate e = J_n(0, j, x);
            CHECK(std::abs(e.value - 1.0 / (1.0 - x * x)) <= e.error + 1e-15);
            CHECK(e.value <= J_n_majorant(0, x));
        }
}

TEST_CASE("lemma suites") {
    const CheckTable t2 = check_lem2(8, 8, RationalScalar(1, 2));
    CHECK(t2.failed() == 0);
    const CheckTable t3 = check_lem3(6, 8, {0.5});
    CHECK(t3.failed() == 0);
    const CheckTable t1 = check_lem1(10);
    CHECK(t1.failed() == 0);
    CHECK(t1.flagged_failed() > 0);
}

TEST_CASE("HS norm of Q_0 against a direct sum") {
    const HsResult r = hs_norm_Qn(0, kP, BetaFunction::canonical());
    const double direct = hs0_direct(200);
    CHECK(std::abs(r.sq_window - direct) <= r.sq_tail + 1e-12 * direct);
    CHECK(r.sq_window <= direct * (1 + 1e-14));
    CHECK(direct <= (r.sq_window + r.sq_tail) * (1 + 1e-14));
}

TEST_CASE("HS norm divergence") {
    try {
        (void)hs_norm_Qn(0, WeightParams::make(2, 1, 1.5), BetaFunction::canonical());
        FAIL("expected DivergenceError");
    } catch (const DivergenceError& e) {
        CHECK(std::string(e.what()).find("γ > a") != std::string::npos);
    }
    CHECK_THROWS_AS(hs_norm_Qn(0, WeightParams::make(1, 2, 3), BetaFunction::canonical()), DivergenceError);
}

TEST_CASE("mirror identity for negative modes") {
    for (long n : {-1L, -4L, -9L}) {
        const HsResult a = hs_norm_Qn(n, kP, BetaFunction::canonical());
        const HsResult b = hs_norm_mirror(n, kP);
        CHECK(std::abs(a.value() - b.value()) <= 1e-12 * a.value() + a.bound() + b.bound());
    }
}

TEST_CASE("regions at n = 3") {
    const RegionReport r = region_bounds(3, kP);
    CHECK(r.dominance());
    for (int k = kernels::kC1; k <= kernels::kD2; ++k) CHECK(r.upper(k) <= r.majorant[k]);
    CHECK(r.geometric_factor < 1.0);
}

TEST_CASE("beta growth constants") {
    const BetaFunction b = BetaFunction::canonical();
    CHECK(beta_bound_holds(b, 0.25, 1.5));
    CHECK_FALSE(beta_bound_holds(b, 0.5, 1.5));
    const BetaBound c = beta_bound_constants(b);
    CHECK(c.c1 == doctest::Approx(0.25));
    CHECK(c.c2 <= 1.5);
    const BetaBound c2 = beta_bound_constants(b.scaled(2.0));
    CHECK(c2.c1 == doctest::Approx(2 * c.c1));
    CHECK(c2.c2 == doctest::Approx(2 * c.c2));
}

TEST_CASE("decay on the positive side") {
    const DecayReport rep = decay_experiment(kP, BetaFunction::canonical(), 0, 12);
    REQUIRE(rep.onset_positive.has_value());
    CHECK(*rep.onset_positive <= 10);
}
