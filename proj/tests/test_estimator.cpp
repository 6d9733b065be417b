#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "ncgas/errors.hpp"
#include "ncgas/estimator.hpp"
#include "ncgas/kernels.hpp"

using namespace ncgas;

namespace {

SamplerConfig small_config(std::uint64_t n, std::uint64_t seed = 42, std::uint64_t batch = 4096) {
    SamplerConfig cfg;
    cfg.n_samples = n;
    cfg.seed = seed;
    cfg.batch_size = batch;
    return cfg;
}

constexpr double kBall = 4.0 * std::numbers::pi / 3.0;

double shell_indicator(const PhasePoint& pt) {
    const double q2 = norm2(pt.q);
    return (norm2(pt.k) < 1.0 && norm2(pt.p) < 1.0 && q2 > 1.0 && q2 < 4.0) ? 1.0 : 0.0;
}

} // namespace

TEST_CASE("estimates are identical for every worker count") {
    const auto cfg = small_config(100'000, 7, 1000);
    const auto ref = estimate(kernel_comm, cfg, 1);
    for (unsigned w : {2u, 4u, 16u, 0u}) CHECK(estimate(kernel_comm, cfg, w) == ref);
    const auto oref = oracle_estimate(kernel_comm, cfg, 1);
    for (unsigned w : {4u, 16u}) CHECK(oracle_estimate(kernel_comm, cfg, w) == oref);
}

TEST_CASE("sweep entries match single-kernel estimates bit for bit") {
    const auto cfg = small_config(50'000, 3);
    const std::vector<Kernel> kernels{kernel_comm, kernel_r, [](const PhasePoint& pt) { return kernel_avg(pt, 2.0); }};
    const auto sweep = estimate_sweep(kernels, cfg, 4);
    REQUIRE(sweep.size() == kernels.size());
    for (std::size_t j = 0; j < kernels.size(); ++j) CHECK(sweep[j] == estimate(kernels[j], cfg, 1));
}

TEST_CASE("failure modes") {
    CHECK_THROWS_AS(estimate(kernel_comm, small_config(0, 1, 1)), BudgetExhaustedError);
    CHECK_THROWS_AS(estimate_sweep({}, small_config(1000)), ValidationError);
    const Kernel bad = [](const PhasePoint& pt) { return pt.q.x > 3.0 ? std::nan("") : 1.0; };
    CHECK_THROWS_AS(estimate(bad, small_config(20'000), 4), NonFiniteKernelError);
    auto cfg = small_config(1000);
    cfg.oracle_box = 2.0;
    CHECK_THROWS_AS(oracle_estimate(kernel_comm, cfg), ValidationError);
    const Kernel throws = [](const PhasePoint&) -> double { throw std::runtime_error("boom"); };
    CHECK_THROWS_AS(estimate(throws, small_config(10'000), 4), std::runtime_error);
}

TEST_CASE("zero integrand gives an exact zero estimate") {
    const auto est = estimate([](const PhasePoint&) { return 0.0; }, small_config(10'000));
    CHECK(est.mean == 0.0);
    CHECK(est.std_error == 0.0);
    CHECK(est.n_samples == 10'000);
}

TEST_CASE("shell volume is recovered by both estimators") {
    const double exact = kBall * kBall * kBall * 7.0;
    const auto cfg = small_config(400'000, 11);
    const auto main = estimate(shell_indicator, cfg);
    CHECK(std::abs(main.mean - exact) < 3.0 * main.std_error);
    const auto oracle = oracle_estimate(shell_indicator, cfg);
    CHECK(std::abs(oracle.mean - exact) < 3.0 * oracle.std_error);
}

TEST_CASE("commutative exchange integral matches its closed form") {
    // raw integral = (ln2/3 - 3 zeta(3)/(2 pi^2)) * 16 pi^5 / 3
    constexpr double exact = 78.92585163;
    const auto est = estimate(kernel_comm, small_config(2'000'000, 5, 65'536));
    CHECK(std::abs(est.mean - exact) < 3.0 * est.std_error);
    CHECK(est.acceptance_rate > 0.2);
    CHECK(est.acceptance_rate < 0.5);
    CHECK(est.n_in_domain == static_cast<std::uint64_t>(std::llround(est.acceptance_rate * est.n_samples)));
}

TEST_CASE("scaled multiplies mean and error") {
    IntegralEstimate e{2.0, 0.5, 10, 4, 0.4};
    const auto s = e.scaled(-3.0);
    CHECK(s.mean == -6.0);
    CHECK(s.std_error == 1.5);
    CHECK(s.n_samples == 10);
}

TEST_CASE("Moments merge agrees with a direct computation") {
    std::vector<double> xs;
    for (int i = 0; i < 1000; ++i) xs.push_back(std::sin(i * 0.37) * 5.0 + i * 1e-3);
    const auto whole = Moments::of(xs);
    std::vector<Moments> parts;
    for (std::size_t off = 0; off < xs.size(); off += 137)
        parts.push_back(Moments::of(std::span(xs).subspan(off, std::min<std::size_t>(137, xs.size() - off))));
    const auto merged = Moments::reduce_tree(parts);
    CHECK(merged.count == whole.count);
    CHECK(merged.mean == doctest::Approx(whole.mean).epsilon(1e-12));
    CHECK(merged.m2 == doctest::Approx(whole.m2).epsilon(1e-12));
    CHECK(Moments::reduce_tree({}).count == 0);
}
