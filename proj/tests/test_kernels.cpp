#include <doctest.h>

#include <cmath>

#include "qannulus/kernels.hpp"

using namespace qannulus;

namespace {

const WeightParams kP = WeightParams::make(2, 1, 3);

}  // namespace

TEST_CASE("parallel blocks equal the serial reference") {
    for (const BetaFunction& b : {BetaFunction::canonical(), BetaFunction::sine_perturbed(0.3, 20)})
        for (long n : {-5L, -1L, 0L, 2L, 7L}) {
            const ModeOperatorSpec s{n, b, kP};
            const kernels::SiteRange r = kernels::SiteRange::symmetric(25);
            CHECK(kernels::q_block(s, r) == kernels::serial::q_block(s, r));
            CHECK(kernels::d_block(s, r) == kernels::serial::d_block(s, r));
        }
}

TEST_CASE("parallel HS window agrees with the serial reference") {
    for (long n : {-6L, 0L, 5L}) {
        const ModeOperatorSpec s{n, BetaFunction::canonical(), kP};
        const kernels::HsWindow a = kernels::hs_window(s, {kP.a, kP.b}, 40);
        const kernels::HsWindow b = kernels::serial::hs_window(s, {kP.a, kP.b}, 40);
        CHECK(std::abs(a.total - b.total) <= 1e-13 * b.total);
        for (int k = 0; k < kernels::kRegionCount; ++k) CHECK(std::abs(a.region[k] - b.region[k]) <= 1e-13 * b.total);
    }
}

TEST_CASE("kernel sweep agrees with the serial reference") {
    const ModeOperatorSpec s{0, BetaFunction::canonical(), kP};
    const auto a = kernels::kernel_sweep(s, -3, 3, 8);
    const auto b = kernels::serial::kernel_sweep(s, -3, 3, 8);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].n == b[i].n);
        CHECK(a[i].l == b[i].l);
        CHECK(a[i].j == b[i].j);
        CHECK(a[i].k.sign == b[i].k.sign);
        CHECK(a[i].k.log_magnitude == b[i].k.log_magnitude);
    }
}

TEST_CASE("ordered map keeps index order") {
    const auto v = kernels::ordered_map(100, [](long i) { return i * i; });
    for (long i = 0; i < 100; ++i) CHECK(v[static_cast<std::size_t>(i)] == i * i);
}

TEST_CASE("region membership covers the upper triangle") {
    for (long n : {0L, 1L, 4L})
        for (long l = -12; l <= 12; ++l)
            for (long j = l; j <= 12; ++j) {
                const auto m = kernels::region_membership(n, l, j);
                const int top = m[kernels::kA] + m[kernels::kB] + m[kernels::kC1] + m[kernels::kC2] + m[kernels::kC3] +
                                m[kernels::kD1] + m[kernels::kD2] + m[kernels::kD3];
                CHECK(top >= 1);
            }
}

TEST_CASE("results do not depend on the thread count") {
    const ModeOperatorSpec s{-4, BetaFunction::canonical(), kP};
    const int saved = kernels::thread_count();
    kernels::set_thread_count(1);
    const kernels::HsWindow one = kernels::hs_window(s, {kP.a, kP.b}, 60);
    const Eigen::MatrixXd q1 = kernels::q_block(s, kernels::SiteRange::symmetric(30));
    kernels::set_thread_count(4);
    const kernels::HsWindow four = kernels::hs_window(s, {kP.a, kP.b}, 60);
    const Eigen::MatrixXd q4 = kernels::q_block(s, kernels::SiteRange::symmetric(30));
    kernels::set_thread_count(saved);
    CHECK(one.total == four.total);
    CHECK(one.row_sum == four.row_sum);
    CHECK(q1 == q4);
}
