#include "ncgas/sampler.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ncgas/errors.hpp"
#include "ncgas/philox.hpp"

namespace ncgas {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kBallVolume = 4.0 * std::numbers::pi / 3.0;
// ASCII "ncgas-v1", second key word; the user seed is the first.
constexpr std::uint64_t kStreamTag = 0x6e636761732d7631ULL;
constexpr double kUniformShare = 0.5;

Vec3 unit_vector(double u_cos, double u_phi) noexcept {
    const double c = 2.0 * u_cos - 1.0;
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    const double phi = kTwoPi * u_phi;
    return {s * std::cos(phi), s * std::sin(phi), c};
}

Vec3 in_unit_ball(double u_r, double u_cos, double u_phi) noexcept {
    return std::cbrt(u_r) * unit_vector(u_cos, u_phi);
}

} // namespace

void SamplerConfig::validate() const {
    if (batch_size == 0) throw ValidationError("batch_size must be >= 1");
    if (n_samples != 0 && n_samples < batch_size) {
        throw ValidationError("n_samples (" + std::to_string(n_samples) + ") must be >= batch_size (" +
                              std::to_string(batch_size) + ")");
    }
    if (!(q_tail_scale > 0.0 && q_tail_scale <= 100.0)) {
        throw ValidationError("q_tail_scale must lie in (0, 100]");
    }
    if (!(oracle_box > 0.0) || !std::isfinite(oracle_box)) {
        throw ValidationError("oracle_box must be finite and > 0");
    }
}

double radial_quantile(double u, double q_tail_scale) noexcept { return q_tail_scale * u / (1.0 - u); }

double radial_density(double radius, double q_tail_scale) noexcept {
    const double t = q_tail_scale + radius;
    return q_tail_scale / (t * t);
}

SampleDraw sample_point(std::uint64_t index, std::uint64_t seed, double q_tail_scale) noexcept {
    // Counter = (index, block); three blocks supply the 10 uniforms used.
    const PhiloxKey key{seed, kStreamTag};
    const auto b0 = philox4x64({index, 0, 0, 0}, key);
    const auto b1 = philox4x64({index, 1, 0, 0}, key);
    const auto b2 = philox4x64({index, 2, 0, 0}, key);

    SampleDraw draw;
    PhasePoint& pt = draw.point;
    pt.k = in_unit_ball(to_open_unit(b0[0]), to_open_unit(b0[1]), to_open_unit(b0[2]));
    const double radius = radial_quantile(to_open_unit(b1[2]), q_tail_scale);
    pt.q = radius * unit_vector(to_open_unit(b1[3]), to_open_unit(b2[0]));

    // p: defensive mixture of the uniform ball and a 1/|p - c|^2 law around
    // c = k + q, which tames the |q + k - p| -> 0 singularity.
    const Vec3 centre = pt.k + pt.q;
    const double reach = norm(centre) + 1.0;
    const double u1 = to_open_unit(b0[3]), u2 = to_open_unit(b1[0]), u3 = to_open_unit(b1[1]);
    if (to_open_unit(b2[1]) < kUniformShare) {
        pt.p = in_unit_ball(u1, u2, u3);
    } else {
        pt.p = centre - (reach * u1) * unit_vector(u2, u3);
    }

    if (norm2(pt.p) >= 1.0) {
        draw.weight = 0.0;
        return draw;
    }
    const double gap2 = norm2(centre - pt.p);
    const double p_density = kUniformShare / kBallVolume + (1.0 - kUniformShare) / (2.0 * kTwoPi * gap2 * reach);

    // density of q in R^3 is rho(Q) / (4 pi Q^2)
    const double q_weight = 2.0 * kTwoPi * radius * radius / radial_density(radius, q_tail_scale);
    draw.weight = kBallVolume * q_weight / p_density;
    return draw;
}

} // namespace ncgas
