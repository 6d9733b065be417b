#pragma once

// Integrands of the second-order exchange energy of the degenerate electron
// gas and of its noncommutative deformation. All momenta are dimensionless
// (units of k_F). Every kernel is indicator-extended: it returns 0 outside
// the Fermi-constrained domain so it can be integrated over the full
// sampling space.

#include <complex>

#include "ncgas/vec3.hpp"

namespace ncgas {

/// One 9-D integration point: momentum transfer q and the two hole momenta.
struct PhasePoint {
    Vec3 q; ///< momentum transfer
    Vec3 k; ///< hole momentum 1
    Vec3 p; ///< hole momentum 2

    friend constexpr bool operator==(const PhasePoint&, const PhasePoint&) = default;
};

/// Direction and dimensionless size (tau = k_F^2 theta) of the
/// noncommutativity vector theta^i = 1/2 eps^{ijk} Theta^{jk}.
class ThetaVector {
public:
    /// Throws ValidationError unless |direction| = 1 (within 1e-12) and tau >= 0.
    ThetaVector(const Vec3& direction, double tau);

    const Vec3& direction() const noexcept { return direction_; }
    double tau() const noexcept { return tau_; }

private:
    Vec3 direction_;
    double tau_;
};

/// |k| < 1, |p| < 1, |k+q| > 1, |p-q| > 1 and q != 0, all strict.
bool in_domain(const PhasePoint& pt) noexcept;

/// q^2 [q.(q+k-p)] |q+k-p|^2. Throws DomainError outside the domain.
double energy_denominator(const PhasePoint& pt);

/// 1 / energy_denominator inside the domain, 0 outside.
double kernel_comm(const PhasePoint& pt) noexcept;

/// 2 tau theta_hat . (q x (k-p)), i.e. 2 k_F^2 q ^ (k-p) with
/// q ^ v = theta . (q x v).
double wedge_phase(const PhasePoint& pt, const ThetaVector& theta) noexcept;

/// kernel_comm * cos(wedge_phase): the fixed-direction deformed integrand.
double kernel_cos(const PhasePoint& pt, const ThetaVector& theta) noexcept;

/// kernel_comm * exp(-i wedge_phase). Its real part is bit-identical to kernel_cos.
std::complex<double> kernel_phase(const PhasePoint& pt, const ThetaVector& theta) noexcept;

/// sin(x)/x, with a Taylor branch for |x| < 1e-4.
double sinc(double x) noexcept;

/// kernel_comm * sinc(tau |q x (k-p)|): the integrand averaged over all
/// directions of theta.
double kernel_avg(const PhasePoint& pt, double tau) noexcept;

/// kernel_comm * |q x (k-p)|^2, the integrand of the quadratic coefficient R.
double kernel_r(const PhasePoint& pt) noexcept;

} // namespace ncgas
