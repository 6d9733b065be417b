// Brute-force reference estimator. Deliberately naive and independent of
// estimate(): a different generator, flat boxes, hit-or-miss rejection into
// the unit balls and a sequential sum-of-squares reduction.

#include <cmath>
#include <random>
#include <string>

#include "ncgas/errors.hpp"
#include "ncgas/estimator.hpp"

namespace ncgas {

namespace {

struct PlainSums {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::uint64_t count = 0;
    std::uint64_t in_domain = 0;
};

} // namespace

IntegralEstimate oracle_estimate(const Kernel& kernel, const SamplerConfig& config, unsigned workers) {
    if (config.n_samples == 0) throw BudgetExhaustedError("sample budget is zero");
    config.validate();
    if (config.oracle_box < 3.0) throw ValidationError("oracle_box must be >= 3");

    const double half = config.oracle_box;
    const double volume = (2.0 * half) * (2.0 * half) * (2.0 * half) * 8.0 * 8.0;
    const std::uint64_t batch = config.batch_size;
    const std::uint64_t n_batches = (config.n_samples + batch - 1) / batch;
    std::vector<PlainSums> partial(n_batches);

    detail::parallel_batches(n_batches, detail::resolve_workers(workers, n_batches), [&](std::uint64_t b) {
        std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                          static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32), 0x6f72636cU};
        std::mt19937_64 rng(seq);
        std::uniform_real_distribution<double> box(-half, half);
        std::uniform_real_distribution<double> cube(-1.0, 1.0);

        const std::uint64_t begin = b * batch;
        const std::uint64_t end = std::min(config.n_samples, begin + batch);
        PlainSums s;
        for (std::uint64_t i = begin; i < end; ++i) {
            PhasePoint pt;
            pt.q = {box(rng), box(rng), box(rng)};
            pt.k = {cube(rng), cube(rng), cube(rng)};
            pt.p = {cube(rng), cube(rng), cube(rng)};
            ++s.count;
            if (in_domain(pt)) ++s.in_domain;
            if (norm2(pt.k) >= 1.0 || norm2(pt.p) >= 1.0) continue;
            const double t = kernel(pt) * volume;
            if (!std::isfinite(t)) {
                throw NonFiniteKernelError("oracle: kernel returned a non-finite value at sample " + std::to_string(i));
            }
            s.sum += t;
            s.sum_sq += t * t;
        }
        partial[b] = s;
    });

    PlainSums total;
    for (const auto& s : partial) {
        total.sum += s.sum;
        total.sum_sq += s.sum_sq;
        total.count += s.count;
        total.in_domain += s.in_domain;
    }
    const double n = static_cast<double>(total.count);
    IntegralEstimate out;
    out.mean = total.sum / n;
    out.n_samples = total.count;
    out.n_in_domain = total.in_domain;
    out.acceptance_rate = static_cast<double>(total.in_domain) / n;
    if (total.count > 1) {
        const double variance = std::max(0.0, (total.sum_sq - n * out.mean * out.mean) / (n - 1.0));
        out.std_error = std::sqrt(variance / n);
    }
    return out;
}

} // namespace ncgas
