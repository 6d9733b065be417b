// Expected values marked "oracle" come from tests/oracles/frozen_values.py.

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "doctest.h"
#include "ncgas/errors.hpp"
#include "ncgas/kernels.hpp"

using namespace ncgas;

namespace {

const PhasePoint kSymmetric{{2, 0, 0}, {0, 0, 0}, {0, 0, 0}};
const PhasePoint kSplit{{2, 0, 0}, {0, 0.5, 0}, {0, -0.5, 0}};
const ThetaVector kZ(Vec3{0, 0, 1}, 0.5);

bool same_bits(double a, double b) { return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b); }

Vec3 uniform_in_ball(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        Vec3 v{u(rng), u(rng), u(rng)};
        if (norm2(v) < 1.0) return v;
    }
}

// Random points that satisfy in_domain, with q spread over [-4, 4]^3.
PhasePoint random_in_domain(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uq(-4.0, 4.0);
    for (;;) {
        PhasePoint pt{{uq(rng), uq(rng), uq(rng)}, uniform_in_ball(rng), uniform_in_ball(rng)};
        if (in_domain(pt)) return pt;
    }
}

PhasePoint random_any(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uq(-3.0, 3.0), uk(-1.2, 1.2);
    return {{uq(rng), uq(rng), uq(rng)}, {uk(rng), uk(rng), uk(rng)}, {uk(rng), uk(rng), uk(rng)}};
}

Vec3 random_direction(std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Vec3 v{g(rng), g(rng), g(rng)};
    return (1.0 / norm(v)) * v;
}

} // namespace

TEST_CASE("in_domain") {
    CHECK(in_domain(kSymmetric));
    CHECK_FALSE(in_domain({{0.5, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
    CHECK_FALSE(in_domain({{2, 0, 0}, {1.5, 0, 0}, {0, 0, 0}}));
    CHECK_FALSE(in_domain({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}));

    SUBCASE("boundary equalities are excluded") {
        CHECK_FALSE(in_domain({{2, 0, 0}, {1, 0, 0}, {0, 0, 0}}));    // |k| = 1
        CHECK_FALSE(in_domain({{2, 0, 0}, {0, 0, 0}, {0, -1, 0}}));   // |p| = 1
        CHECK_FALSE(in_domain({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}));    // |k+q| = 1
        CHECK_FALSE(in_domain({{1.5, 0, 0}, {-0.5, 0, 0}, {0, 0, 0}})); // |k+q| = 1
    }
}

TEST_CASE("energy_denominator") {
    CHECK(energy_denominator(kSymmetric) == 64.0);
    CHECK(energy_denominator(kSplit) == doctest::Approx(80.0).epsilon(1e-15)); // oracle
    CHECK_THROWS_AS(energy_denominator({{0.5, 0, 0}, {0, 0, 0}, {0, 0, 0}}), DomainError);

    SUBCASE("positive on random in-domain points") {
        std::mt19937_64 rng(7);
        for (int i = 0; i < 1'000'000; ++i) {
            const PhasePoint pt = random_in_domain(rng);
            REQUIRE(energy_denominator(pt) > 0.0);
        }
    }
}

TEST_CASE("kernel_comm") {
    CHECK(kernel_comm(kSymmetric) == 0.015625);
    CHECK(kernel_comm({{0.5, 0, 0}, {0, 0, 0}, {0, 0, 0}}) == 0.0);
    CHECK(kernel_comm(kSplit) == doctest::Approx(0.0125).epsilon(1e-15)); // oracle
}

TEST_CASE("wedge_phase") {
    CHECK(wedge_phase({{1, 2, 3}, {0.1, 0.2, 0.3}, {0.1, 0.2, 0.3}}, kZ) == 0.0);
    CHECK(wedge_phase({{1, 0, 0}, {0, 0.5, 0}, {0, -0.5, 0}}, kZ) == doctest::Approx(1.0)); // oracle
    CHECK(wedge_phase(kSplit, ThetaVector({0, 0, 1}, 0.0)) == 0.0);
}

TEST_CASE("kernel_cos") {
    const ThetaVector half_pi({0, 0, 1}, std::numbers::pi / 2);
    CHECK(kernel_cos(kSplit, half_pi) == doctest::Approx(0.0125).epsilon(1e-14)); // oracle: cos(2 pi)
    CHECK(kernel_cos(kSymmetric, half_pi) == kernel_comm(kSymmetric));            // k = p
    CHECK(kernel_cos({{0.5, 0, 0}, {}, {}}, half_pi) == 0.0);
}

TEST_CASE("kernel_phase real part is the cosine kernel") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 10'000; ++i) {
        const PhasePoint pt = random_any(rng);
        const ThetaVector theta(random_direction(rng), 2.0 * i / 10'000.0);
        const auto z = kernel_phase(pt, theta);
        REQUIRE(same_bits(z.real(), kernel_cos(pt, theta)));
        REQUIRE(std::abs(std::abs(z) - kernel_comm(pt)) <= 1e-15 * kernel_comm(pt));
    }
}

TEST_CASE("sinc") {
    CHECK(sinc(0.0) == 1.0);
    CHECK(std::abs(sinc(std::numbers::pi)) < 1e-15);
    CHECK(std::abs(sinc(1e-9) - 1.0) < 1e-17);
    CHECK(sinc(-2.5) == sinc(2.5));

    SUBCASE("analytic branch") {
        for (double x = 1e-4; x <= 1e3; x *= 1.01) {
            REQUIRE(std::abs(sinc(x) - std::sin(x) / x) < 1e-15);
            REQUIRE(std::abs(sinc(-x) - std::sin(x) / x) < 1e-15);
        }
    }
    SUBCASE("branches agree at the switchover") {
        const double below = std::nextafter(1e-4, 0.0);
        CHECK(std::abs(sinc(below) - std::sin(below) / below) < 1e-15);
        CHECK(std::abs(sinc(below) - sinc(1e-4)) < 1e-15);
    }
}

TEST_CASE("kernel_avg") {
    CHECK(same_bits(kernel_avg(kSplit, 0.0), kernel_comm(kSplit)));
    CHECK(kernel_avg(kSymmetric, 7.0) == kernel_comm(kSymmetric));
    // |q x (k-p)| = 2 for kSplit
    CHECK(kernel_avg(kSplit, 0.25) == doctest::Approx(0.0125 * std::sin(0.5) / 0.5));
}

TEST_CASE("kernel_r") {
    CHECK(kernel_r(kSymmetric) == 0.0);
    CHECK(kernel_r(kSplit) == doctest::Approx(0.05).epsilon(1e-15)); // oracle
    CHECK(kernel_r({{0.5, 0, 0}, {0, 0.5, 0}, {0, -0.5, 0}}) == 0.0);
}

TEST_CASE("ThetaVector validation") {
    CHECK_THROWS_AS(ThetaVector({0, 0, 2}, 1.0), ValidationError);
    CHECK_THROWS_AS(ThetaVector({0, 0, 1}, -0.1), ValidationError);
    CHECK_NOTHROW(ThetaVector({0, 0.6, 0.8}, 0.0));
}

TEST_CASE("exchange symmetry (q, k, p) -> (-q, p, k) is exact") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200'000; ++i) {
        const PhasePoint pt = random_any(rng);
        const PhasePoint swapped{-pt.q, pt.p, pt.k};
        const double tau = 0.01 * (i % 500);
        REQUIRE(in_domain(pt) == in_domain(swapped));
        REQUIRE(same_bits(kernel_comm(pt), kernel_comm(swapped)));
        REQUIRE(same_bits(kernel_avg(pt, tau), kernel_avg(swapped, tau)));
        REQUIRE(same_bits(kernel_r(pt), kernel_r(swapped)));
    }
}

TEST_CASE("reduction, bounds and positivity on random points") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200'000; ++i) {
        const PhasePoint pt = random_any(rng);
        const double base = kernel_comm(pt);
        const ThetaVector zero(random_direction(rng), 0.0);
        const double tau = std::ldexp(1.0, static_cast<int>(i % 24) - 8);
        REQUIRE(same_bits(kernel_cos(pt, zero), base));
        REQUIRE(same_bits(kernel_avg(pt, 0.0), base));
        REQUIRE(base >= 0.0);
        REQUIRE(kernel_r(pt) >= 0.0);
        REQUIRE(std::abs(kernel_avg(pt, tau)) <= base);
    }
}
