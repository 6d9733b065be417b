#include "ncgas/sweep.hpp"

#include <chrono>

#include "ncgas/errors.hpp"
#include "ncgas/manifest.hpp"
#include "ncgas/number_format.hpp"
#include "ncgas/svg.hpp"

namespace ncgas {

namespace {

class Stopwatch {
public:
    double lap() {
        const auto now = std::chrono::steady_clock::now();
        const double s = std::chrono::duration<double>(now - last_).count();
        last_ = now;
        return s;
    }

private:
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

} // namespace

SweepResult evaluate_grid(const RunConfig& config, unsigned workers) {
    config.validate();
    SweepResult result;
    Stopwatch watch;
    result.eps2b_by_tau = eps2b_tau_sweep(config.tau_grid, config.sampler, workers);
    result.timings.estimate_seconds = watch.lap();

    result.rows.reserve(config.rs_grid.size() * config.tau_grid.size());
    for (double rs : config.rs_grid) {
        for (std::size_t t = 0; t < config.tau_grid.size(); ++t) {
            result.rows.push_back({rs, config.tau_grid[t], assemble_energy(rs, result.eps2b_by_tau[t])});
        }
    }
    result.timings.assemble_seconds = watch.lap();
    return result;
}

std::string to_csv(const SweepResult& result) {
    std::string out(kCsvHeader);
    out += '\n';
    for (const auto& row : result.rows) {
        const auto& e = row.energy;
        for (double v : {row.rs, row.tau, e.eps_fermi, e.eps_exchange, e.eps2_ring, e.eps2b, e.eps2b_stderr, e.total,
                         e.total_stderr}) {
            if (out.back() != '\n') out += ',';
            out += format_sig10(v);
        }
        out += '\n';
    }
    return out;
}

RunArtifacts run_sweep(const RunConfig& config, const RunOptions& options) {
    RunArtifacts artifacts;
    SweepResult result;
    try {
        result = evaluate_grid(config, options.workers);
    } catch (const EstimatorError& err) {
        artifacts.error = err.what();
        artifacts.manifest = dump_manifest(build_manifest(config, nullptr, artifacts.error, false));
        return artifacts;
    }
    Stopwatch watch;
    artifacts.csv = to_csv(result);
    if (!config.outputs.svg_path.empty()) artifacts.svg = emit_svg(artifacts.csv);
    result.timings.render_seconds = watch.lap();
    artifacts.complete = true;
    artifacts.manifest = dump_manifest(build_manifest(config, &result, {}, options.record_timing));
    return artifacts;
}

} // namespace ncgas
