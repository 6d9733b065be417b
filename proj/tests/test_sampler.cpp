#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "ncgas/philox.hpp"
#include "ncgas/sampler.hpp"

using namespace ncgas;

TEST_CASE("philox4x64-10 matches numpy.random.Philox") {
    // numpy increments the counter before generating, so its first outputs
    // for counter c are philox(c + 1).
    CHECK(philox4x64({1, 0, 0, 0}, {0, 0}) ==
          PhiloxCounter{0x02f4ba6408e4d89bULL, 0x3dd62b0b9ca8c5b2ULL, 0x1c8667a55d902e79ULL, 0x907d7a052fd5b4dcULL});
    CHECK(philox4x64({42, 7, 3, 0}, {42, 0x6e636761732d7631ULL}) ==
          PhiloxCounter{0x84ffd314b1360218ULL, 0x1d742fa0aa9bd2ceULL, 0x33e76fb35706fe4aULL, 0xaabf063c07a0007eULL});
}

TEST_CASE("to_open_unit stays strictly inside (0, 1)") {
    CHECK(to_open_unit(0) > 0.0);
    CHECK(to_open_unit(~0ULL) < 1.0);
}

TEST_CASE("sample_point is a pure function of (index, seed)") {
    for (std::uint64_t i : {0ULL, 1ULL, 123456789ULL, ~0ULL}) {
        const auto a = sample_point(i, 42);
        const auto b = sample_point(i, 42);
        CHECK(a.point == b.point);
        CHECK(a.weight == b.weight);
    }
    CHECK_FALSE(sample_point(5, 42).point == sample_point(5, 43).point);
    CHECK_FALSE(sample_point(5, 42).point == sample_point(6, 42).point);
}

TEST_CASE("radial quantile endpoints") {
    CHECK(radial_quantile(1e-300, 2.0) == doctest::Approx(0.0));
    CHECK(radial_quantile(0.5, 2.0) == doctest::Approx(2.0));
    CHECK(radial_quantile(1.0 - 1e-15, 2.0) > 1e15);
    CHECK(radial_density(0.0, 2.0) == doctest::Approx(0.5));
}

TEST_CASE("draws stay in the sampling space with finite weights") {
    int outside = 0;
    for (std::uint64_t i = 0; i < 200'000; ++i) {
        const auto d = sample_point(i, 9, 2.0);
        REQUIRE(norm2(d.point.k) < 1.0);
        REQUIRE(std::isfinite(d.weight));
        REQUIRE(d.weight >= 0.0);
        if (norm2(d.point.p) >= 1.0) {
            REQUIRE(d.weight == 0.0);
            ++outside;
        } else {
            REQUIRE(d.weight > 0.0);
        }
    }
    // only the concentrated mixture component can leave the ball
    CHECK(outside > 0);
    CHECK(outside < 100'000);
}

TEST_CASE("|q| follows s/(s+Q)^2 (Kolmogorov-Smirnov, alpha = 0.01)") {
    for (double s : {2.0, 0.5}) {
        constexpr std::size_t n = 1'000'000;
        std::vector<double> radii(n);
        for (std::size_t i = 0; i < n; ++i) radii[i] = norm(sample_point(i, 2024, s).point.q);
        std::sort(radii.begin(), radii.end());
        double d = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double cdf = radii[i] / (s + radii[i]);
            d = std::max({d, std::abs(cdf - static_cast<double>(i) / n), std::abs(cdf - static_cast<double>(i + 1) / n)});
        }
        CHECK(d < 1.628 / std::sqrt(static_cast<double>(n)));
    }
}

TEST_CASE("hole momentum k is uniform in the unit ball") {
    constexpr int n = 400'000;
    double r2 = 0.0, z = 0.0;
    for (int i = 0; i < n; ++i) {
        const Vec3 k = sample_point(i, 77).point.k;
        r2 += norm2(k);
        z += k.z;
    }
    // E|k|^2 = 3/5, sd(|k|^2) ~ 0.27
    CHECK(std::abs(r2 / n - 0.6) < 4 * 0.27 / std::sqrt(n));
    CHECK(std::abs(z / n) < 4 * 0.45 / std::sqrt(n));
}

TEST_CASE("SamplerConfig validation") {
    SamplerConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.batch_size = 0;
    CHECK_THROWS(cfg.validate());
    cfg = {};
    cfg.n_samples = 10;
    cfg.batch_size = 20;
    CHECK_THROWS(cfg.validate());
    cfg = {};
    cfg.q_tail_scale = 0.0;
    CHECK_THROWS(cfg.validate());
    cfg.q_tail_scale = 100.5;
    CHECK_THROWS(cfg.validate());
}
