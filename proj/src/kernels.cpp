#include "ncgas/kernels.hpp"

#include <cmath>
#include <string>

#include "ncgas/errors.hpp"

namespace ncgas {

namespace {

constexpr double kSincTaylorCutoff = 1e-4;

// q + (k - p) is evaluated in this order so that the exchange map
// (q, k, p) -> (-q, p, k) negates it exactly.
inline Vec3 transfer(const PhasePoint& pt) noexcept { return pt.q + (pt.k - pt.p); }

inline double denominator_unchecked(const PhasePoint& pt) noexcept {
    const Vec3 w = transfer(pt);
    return norm2(pt.q) * dot(pt.q, w) * norm2(w);
}

inline Vec3 hole_cross(const PhasePoint& pt) noexcept { return cross(pt.q, pt.k - pt.p); }

} // namespace

ThetaVector::ThetaVector(const Vec3& direction, double tau) : direction_(direction), tau_(tau) {
    if (!is_finite(direction) || std::abs(norm(direction) - 1.0) > 1e-12) {
        throw ValidationError("ThetaVector direction must be a unit vector");
    }
    if (!(tau >= 0.0) || !std::isfinite(tau)) {
        throw ValidationError("ThetaVector tau must be finite and >= 0, got " + std::to_string(tau));
    }
}

bool in_domain(const PhasePoint& pt) noexcept {
    return norm2(pt.k) < 1.0 && norm2(pt.p) < 1.0 && norm2(pt.k + pt.q) > 1.0 &&
           norm2(pt.p - pt.q) > 1.0 && norm2(pt.q) > 0.0;
}

double energy_denominator(const PhasePoint& pt) {
    if (!in_domain(pt)) {
        throw DomainError("energy_denominator: point outside the Fermi-constrained domain");
    }
    return denominator_unchecked(pt);
}

double kernel_comm(const PhasePoint& pt) noexcept {
    if (!in_domain(pt)) return 0.0;
    return 1.0 / denominator_unchecked(pt);
}

double wedge_phase(const PhasePoint& pt, const ThetaVector& theta) noexcept {
    return 2.0 * theta.tau() * dot(theta.direction(), hole_cross(pt));
}

[[gnu::noinline, gnu::noclone]] std::complex<double> kernel_phase(const PhasePoint& pt,
                                                                  const ThetaVector& theta) noexcept {
    const double base = kernel_comm(pt);
    if (base == 0.0) return {0.0, 0.0};
    const double chi = wedge_phase(pt, theta);
    return {base * std::cos(chi), -(base * std::sin(chi))};
}

// Shares kernel_phase's code path (kept out of line): the fused sincos used
// there may round differently from a lone cos().
double kernel_cos(const PhasePoint& pt, const ThetaVector& theta) noexcept { return kernel_phase(pt, theta).real(); }

double sinc(double x) noexcept {
    if (std::abs(x) < kSincTaylorCutoff) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

double kernel_avg(const PhasePoint& pt, double tau) noexcept {
    const double base = kernel_comm(pt);
    if (base == 0.0) return 0.0;
    return base * sinc(tau * norm(hole_cross(pt)));
}

double kernel_r(const PhasePoint& pt) noexcept {
    const double base = kernel_comm(pt);
    if (base == 0.0) return 0.0;
    return base * norm2(hole_cross(pt));
}

} // namespace ncgas
