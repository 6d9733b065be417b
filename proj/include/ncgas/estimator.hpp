#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ncgas/kernels.hpp"
#include "ncgas/sampler.hpp"

namespace ncgas {

using Kernel = std::function<double(const PhasePoint&)>;

/// Result of a Monte Carlo integral.
struct IntegralEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t n_samples = 0;
    std::uint64_t n_in_domain = 0; ///< draws inside the Fermi-constrained domain
    double acceptance_rate = 0.0;

    /// Same estimate for factor * integrand.
    IntegralEstimate scaled(double factor) const noexcept;

    friend bool operator==(const IntegralEstimate&, const IntegralEstimate&) = default;
};

/// Running (count, mean, M2) moments of a block of weighted terms.
struct Moments {
    std::uint64_t count = 0;
    double mean = 0.0;
    double m2 = 0.0;

    /// Moments of a contiguous block; compensated sums in index order.
    static Moments of(std::span<const double> terms) noexcept;
    /// Pairwise merge (Chan et al.).
    static Moments merge(const Moments& a, const Moments& b) noexcept;
    /// Fixed balanced binary tree over blocks; the result depends only on
    /// the block sequence.
    static Moments reduce_tree(std::span<const Moments> blocks) noexcept;
};

/// Worker count 0 means std::thread::hardware_concurrency(). Results never
/// depend on the worker count.
IntegralEstimate estimate(const Kernel& kernel, const SamplerConfig& config, unsigned workers = 0);

/// All kernels share one sample stream (same points and weights). Element j
/// equals estimate(kernels[j], config) bit for bit.
std::vector<IntegralEstimate> estimate_sweep(std::span<const Kernel> kernels, const SamplerConfig& config,
                                             unsigned workers = 0);

/// Naive reference estimator: q uniform in [-L, L]^3 (L = config.oracle_box),
/// k and p uniform in [-1, 1]^3 with draws outside the unit balls rejected
/// (zero weight). Estimates the integral over the truncated q-cube. Shares
/// neither the generator nor the reduction with estimate().
IntegralEstimate oracle_estimate(const Kernel& kernel, const SamplerConfig& config, unsigned workers = 0);

namespace detail {

unsigned resolve_workers(unsigned requested, std::uint64_t n_batches) noexcept;

/// Runs body(batch) for every batch in [0, n_batches) on `workers` threads.
/// The first exception thrown by any batch is rethrown after all threads
/// join.
void parallel_batches(std::uint64_t n_batches, unsigned workers, const std::function<void(std::uint64_t)>& body);

} // namespace detail

} // namespace ncgas
