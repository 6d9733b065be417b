#pragma once

// Per-electron ground-state energy of the degenerate electron gas in Rydberg
// units (e^2 / 2 a_0), with the direction-averaged noncommutative
// deformation of the second-order exchange term.

#include <cstdint>
#include <span>
#include <vector>

#include "ncgas/estimator.hpp"
#include "ncgas/kernels.hpp"

namespace ncgas {

struct AnalyticConstants {
    double prefactor;      ///< 3 / (16 pi^5), in front of the exchange integral
    double eps2b_exact;    ///< ln2 / 3 - 3 zeta(3) / (2 pi^2)
    double c_fermi;        ///< (3/5) (9 pi / 4)^(2/3)
    double c_exchange;     ///< (3 / 2 pi) (9 pi / 4)^(1/3)
    double c_log;          ///< 0.0622, second-order ln r_s coefficient
    double c_const_total;  ///< -0.094, second-order constant (ring + exchange)
};

const AnalyticConstants& analytic_constants() noexcept;

/// Density parameter, electron count and dimensionless noncommutativity tau.
struct GasParameters {
    double r_s = 1.0;
    std::uint64_t n_electrons = 1;
    double tau = 0.0;

    void validate() const;
};

struct EnergyBreakdown {
    double eps_fermi = 0.0;
    double eps_exchange = 0.0;
    double eps2_ring = 0.0;
    double eps2b = 0.0;
    double eps2b_stderr = 0.0;
    double total = 0.0;
    double total_stderr = 0.0;

    /// Energy of N electrons (Rydberg).
    double total_for(std::uint64_t n_electrons) const noexcept { return total * static_cast<double>(n_electrons); }
};

struct RCoefficient {
    double value = 0.0;
    double std_error = 0.0;
};

double eps_fermi(double r_s);
double eps_exchange(double r_s);
/// Direct (ring) second-order term: the quoted second-order total minus the
/// exact exchange value. Unaffected by noncommutativity.
double eps2_ring(double r_s);

/// prefactor * integral of kernel_comm.
IntegralEstimate eps2b_commutative(const SamplerConfig& config, unsigned workers = 0);

/// prefactor * integral of kernel_avg(., tau).
IntegralEstimate eps2b_tau(double tau, const SamplerConfig& config, unsigned workers = 0);

/// eps2b_tau for every tau on one shared sample stream.
std::vector<IntegralEstimate> eps2b_tau_sweep(std::span<const double> taus, const SamplerConfig& config,
                                              unsigned workers = 0);

/// Real and imaginary parts of the fixed-direction exchange term with the
/// full phase factor exp(-i chi); real is the cosine-kernel estimate.
struct PhaseEstimate {
    IntegralEstimate real;
    IntegralEstimate imag;
};
PhaseEstimate eps2b_phase(const ThetaVector& theta, const SamplerConfig& config, unsigned workers = 0);

/// Fixed-direction cosine-kernel estimate.
IntegralEstimate eps2b_cos(const ThetaVector& theta, const SamplerConfig& config, unsigned workers = 0);

/// Integral of kernel_r. Throws EstimatorError if the estimate is not positive.
RCoefficient r_coefficient(const SamplerConfig& config, unsigned workers = 0);

/// Quadratic small-tau expansion eps2b_exact - tau^2 R / (32 pi^5).
double eps2b_small_tau(double tau, const RCoefficient& r);

/// Breakdown from an already computed eps2b estimate.
EnergyBreakdown assemble_energy(double r_s, const IntegralEstimate& eps2b);

/// Full breakdown; eps2b from eps2b_tau(params.tau). Terms of order tau^4
/// and r_s ln r_s are not included.
EnergyBreakdown total_energy(const GasParameters& params, const SamplerConfig& config, unsigned workers = 0);

/// d/dtau of the quadratic term: -2 tau R / (32 pi^5). Linear in tau.
double theta_heat(const GasParameters& params, const RCoefficient& r);

/// tau = k_F^2 theta with k_F = (9 pi / 4)^(1/3) / (r_s a_0); theta_area has
/// units of length^2, bohr_radius of length.
double tau_of(double theta_area, double r_s, double bohr_radius);

} // namespace ncgas
