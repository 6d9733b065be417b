#pragma once

#include <cstdint>

#include "ncgas/kernels.hpp"

namespace ncgas {

/// Monte Carlo budget and proposal settings.
struct SamplerConfig {
    std::uint64_t n_samples = 10'000'000;
    std::uint64_t seed = 42;
    double q_tail_scale = 2.0;      ///< scale s of the |q| proposal s/(s+Q)^2
    std::uint64_t batch_size = 65'536;
    double oracle_box = 10.0;       ///< half-width of the oracle's q-cube

    /// Throws ValidationError on a violated invariant (n_samples = 0 is
    /// reported separately by the estimators as budget exhaustion).
    void validate() const;

    friend bool operator==(const SamplerConfig&, const SamplerConfig&) = default;
};

/// A proposal draw and its importance weight (reciprocal density).
struct SampleDraw {
    PhasePoint point;
    double weight = 0.0;
};

/// Draw `index` of the stream keyed by `seed`. k is uniform in the unit
/// ball; q has a uniform direction and |q| = s u / (1 - u), i.e. density
/// s/(s+Q)^2. p comes from an even mixture of the uniform ball law and a
/// 1/|p - k - q|^2 law around k + q; draws of p outside the ball get weight 0. The weight makes E[f * weight] the plain 9-D integral
/// of f over R^3 x B x B.
SampleDraw sample_point(std::uint64_t index, std::uint64_t seed, double q_tail_scale = 2.0) noexcept;

/// Inverse CDF of the radial proposal: u in (0,1) -> Q in (0, inf).
double radial_quantile(double u, double q_tail_scale) noexcept;

/// Density s/(s+Q)^2 of the radial proposal.
double radial_density(double radius, double q_tail_scale) noexcept;

} // namespace ncgas
