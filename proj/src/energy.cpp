#include "ncgas/energy.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ncgas/errors.hpp"

namespace ncgas {

namespace {

using std::numbers::pi;

constexpr double kApery = 1.2020569031595942853997381615114; // zeta(3)

// 32 pi^5: denominator of the quadratic coefficient (prefactor / 6).
const double kQuadraticDenominator = 32.0 * std::pow(pi, 5);

void require_positive_rs(double r_s, const char* op) {
    if (!(r_s > 0.0) || !std::isfinite(r_s)) {
        throw ValidationError(std::string(op) + ": r_s must be > 0, got " + std::to_string(r_s));
    }
}

void require_tau(double tau, const char* op) {
    if (!(tau >= 0.0) || !std::isfinite(tau)) {
        throw ValidationError(std::string(op) + ": tau must be finite and >= 0, got " + std::to_string(tau));
    }
}

AnalyticConstants make_constants() noexcept {
    const double fermi_cube = 9.0 * pi / 4.0;
    AnalyticConstants c{};
    c.prefactor = 3.0 / (16.0 * std::pow(pi, 5));
    c.eps2b_exact = std::numbers::ln2 / 3.0 - 3.0 * kApery / (2.0 * pi * pi);
    c.c_fermi = 0.6 * std::cbrt(fermi_cube * fermi_cube);
    c.c_exchange = 3.0 / (2.0 * pi) * std::cbrt(fermi_cube);
    c.c_log = 0.0622;
    c.c_const_total = -0.094;
    return c;
}

} // namespace

const AnalyticConstants& analytic_constants() noexcept {
    static const AnalyticConstants constants = make_constants();
    return constants;
}

void GasParameters::validate() const {
    require_positive_rs(r_s, "GasParameters");
    require_tau(tau, "GasParameters");
    if (n_electrons == 0) throw ValidationError("GasParameters: n_electrons must be >= 1");
}

double eps_fermi(double r_s) {
    require_positive_rs(r_s, "eps_fermi");
    return analytic_constants().c_fermi / (r_s * r_s);
}

double eps_exchange(double r_s) {
    require_positive_rs(r_s, "eps_exchange");
    return -analytic_constants().c_exchange / r_s;
}

double eps2_ring(double r_s) {
    require_positive_rs(r_s, "eps2_ring");
    const auto& c = analytic_constants();
    return c.c_log * std::log(r_s) + c.c_const_total - c.eps2b_exact;
}

IntegralEstimate eps2b_commutative(const SamplerConfig& config, unsigned workers) {
    return estimate(kernel_comm, config, workers).scaled(analytic_constants().prefactor);
}

IntegralEstimate eps2b_tau(double tau, const SamplerConfig& config, unsigned workers) {
    return eps2b_tau_sweep(std::span<const double>(&tau, 1), config, workers).front();
}

std::vector<IntegralEstimate> eps2b_tau_sweep(std::span<const double> taus, const SamplerConfig& config,
                                              unsigned workers) {
    std::vector<Kernel> kernels;
    kernels.reserve(taus.size());
    for (double tau : taus) {
        require_tau(tau, "eps2b_tau");
        kernels.emplace_back([tau](const PhasePoint& pt) { return kernel_avg(pt, tau); });
    }
    auto estimates = estimate_sweep(kernels, config, workers);
    for (auto& e : estimates) e = e.scaled(analytic_constants().prefactor);
    return estimates;
}

PhaseEstimate eps2b_phase(const ThetaVector& theta, const SamplerConfig& config, unsigned workers) {
    const std::vector<Kernel> kernels{
        [theta](const PhasePoint& pt) { return kernel_phase(pt, theta).real(); },
        [theta](const PhasePoint& pt) { return kernel_phase(pt, theta).imag(); },
    };
    const auto estimates = estimate_sweep(kernels, config, workers);
    const double pref = analytic_constants().prefactor;
    return {estimates[0].scaled(pref), estimates[1].scaled(pref)};
}

IntegralEstimate eps2b_cos(const ThetaVector& theta, const SamplerConfig& config, unsigned workers) {
    return estimate([theta](const PhasePoint& pt) { return kernel_cos(pt, theta); }, config, workers)
        .scaled(analytic_constants().prefactor);
}

RCoefficient r_coefficient(const SamplerConfig& config, unsigned workers) {
    const IntegralEstimate e = estimate(kernel_r, config, workers);
    if (!(e.mean > 0.0)) throw EstimatorError("R estimate is not positive; sample budget too small");
    return {e.mean, e.std_error};
}

double eps2b_small_tau(double tau, const RCoefficient& r) {
    require_tau(tau, "eps2b_small_tau");
    return analytic_constants().eps2b_exact - tau * tau * r.value / kQuadraticDenominator;
}

EnergyBreakdown assemble_energy(double r_s, const IntegralEstimate& eps2b) {
    EnergyBreakdown out;
    out.eps_fermi = eps_fermi(r_s);
    out.eps_exchange = eps_exchange(r_s);
    out.eps2_ring = eps2_ring(r_s);
    out.eps2b = eps2b.mean;
    out.eps2b_stderr = eps2b.std_error;
    out.total = out.eps_fermi + out.eps_exchange + out.eps2_ring + out.eps2b;
    out.total_stderr = out.eps2b_stderr;
    return out;
}

EnergyBreakdown total_energy(const GasParameters& params, const SamplerConfig& config, unsigned workers) {
    params.validate();
    return assemble_energy(params.r_s, eps2b_tau(params.tau, config, workers));
}

double theta_heat(const GasParameters& params, const RCoefficient& r) {
    require_tau(params.tau, "theta_heat");
    return -2.0 * params.tau * r.value / kQuadraticDenominator;
}

double tau_of(double theta_area, double r_s, double bohr_radius) {
    if (!(theta_area >= 0.0)) throw ValidationError("tau_of: theta_area must be >= 0");
    if (!(r_s > 0.0) || !(bohr_radius > 0.0)) throw ValidationError("tau_of: lengths must be > 0");
    const double k_fermi = std::cbrt(9.0 * pi / 4.0) / (r_s * bohr_radius);
    return k_fermi * k_fermi * theta_area;
}

} // namespace ncgas
