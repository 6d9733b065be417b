#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ncgas/energy.hpp"
#include "ncgas/run_config.hpp"

namespace ncgas {

inline constexpr std::string_view kCsvHeader =
    "rs,tau,eps_fermi,eps_exchange,eps2_ring,eps2b,eps2b_stderr,total,total_stderr";

struct SweepRow {
    double rs = 0.0;
    double tau = 0.0;
    EnergyBreakdown energy;
};

struct PhaseTimings {
    double estimate_seconds = 0.0;
    double assemble_seconds = 0.0;
    double render_seconds = 0.0;
};

/// Grid evaluation. The exchange term depends on tau only, so one correlated
/// sweep over tau_grid (a single sample stream) serves every r_s row.
struct SweepResult {
    std::vector<IntegralEstimate> eps2b_by_tau; ///< indexed like tau_grid
    std::vector<SweepRow> rows;                 ///< r_s-major, tau-minor
    PhaseTimings timings;
};

/// Throws EstimatorError (from the engine) on estimator failure.
SweepResult evaluate_grid(const RunConfig& config, unsigned workers = 0);

/// Header line plus one line per row; fields are 10-significant-digit
/// scientific literals, ',' separated, '\n' terminated.
std::string to_csv(const SweepResult& result);

struct RunOptions {
    unsigned workers = 0;
    bool record_timing = false; ///< adds wall-clock seconds to the manifest (no longer byte-reproducible)
};

struct RunArtifacts {
    bool complete = false;
    std::string error;    ///< estimator failure message when !complete
    std::string csv;      ///< empty when !complete
    std::string svg;      ///< empty when no svg path is configured or !complete
    std::string manifest; ///< always present; carries status "aborted" on failure
};

/// Full pipeline behind `ncgas compute`: grid, CSV, optional SVG, manifest.
RunArtifacts run_sweep(const RunConfig& config, const RunOptions& options = {});

} // namespace ncgas
