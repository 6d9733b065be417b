// ncgas: ground-state energy sweeps of the (noncommutative) degenerate
// electron gas.
//
//   ncgas compute --config run.cfg [--samples N] [--seed S] [--out results.csv]
//                 [--svg plot.svg] [--manifest run.json] [--workers W] [--timing]
//   ncgas replay  --manifest run.json [--out results.csv] [--workers W]
//   ncgas verify  [--workers W]
//
// Exit codes: 0 success, 1 validation error, 2 estimator failure (or a
// failed acceptance criterion for verify).

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ncgas/acceptance.hpp"
#include "ncgas/errors.hpp"
#include "ncgas/manifest.hpp"
#include "ncgas/run_config.hpp"
#include "ncgas/sweep.hpp"

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitEstimator = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ncgas::ValidationError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ncgas::ValidationError("cannot write '" + path + "'");
    out << content;
    if (!out) throw ncgas::ValidationError("write failed for '" + path + "'");
}

int execute(const ncgas::RunConfig& config, const ncgas::RunOptions& options) {
    const auto artifacts = ncgas::run_sweep(config, options);
    write_file(config.outputs.manifest_path, artifacts.manifest);
    if (!artifacts.complete) {
        std::cerr << "ncgas: estimator failure: " << artifacts.error << "\n";
        return kExitEstimator;
    }
    write_file(config.outputs.csv_path, artifacts.csv);
    if (!config.outputs.svg_path.empty()) write_file(config.outputs.svg_path, artifacts.svg);
    std::cerr << "ncgas: wrote " << config.outputs.csv_path
              << (config.outputs.svg_path.empty() ? "" : ", " + config.outputs.svg_path) << ", "
              << config.outputs.manifest_path << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ground-state energy of the degenerate electron gas with noncommuting coordinates"};
    app.require_subcommand(1);

    unsigned workers = 0;

    auto* compute = app.add_subcommand("compute", "run an r_s x tau sweep from a config file");
    std::string config_path;
    std::string samples, seed, out, svg, manifest;
    bool timing = false;
    compute->add_option("--config", config_path, "config document (key = value lines)")->required();
    compute->add_option("--samples", samples, "override: Monte Carlo samples");
    compute->add_option("--seed", seed, "override: master seed");
    compute->add_option("--out", out, "override: CSV output path");
    compute->add_option("--svg", svg, "override: SVG output path");
    compute->add_option("--manifest", manifest, "override: manifest output path");
    compute->add_option("--workers", workers, "worker threads (0 = all cores); does not change results");
    compute->add_flag("--timing", timing, "record wall-clock seconds per phase in the manifest");

    auto* replay = app.add_subcommand("replay", "recompute a run from its manifest");
    std::string replay_manifest, replay_out;
    replay->add_option("--manifest", replay_manifest, "manifest of a previous run")->required();
    replay->add_option("--out", replay_out, "CSV output path (default: the recorded one)");
    replay->add_option("--workers", workers, "worker threads (0 = all cores)");

    auto* verify = app.add_subcommand("verify", "run the built-in acceptance suite");
    verify->add_option("--workers", workers, "worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    try {
        if (*compute) {
            ncgas::ConfigOverrides overrides;
            if (!samples.empty()) overrides["samples"] = samples;
            if (!seed.empty()) overrides["seed"] = seed;
            if (!out.empty()) overrides["out"] = out;
            if (!svg.empty()) overrides["svg"] = svg;
            if (!manifest.empty()) overrides["manifest"] = manifest;
            const auto config = ncgas::parse_config(read_file(config_path), overrides);
            return execute(config, {.workers = workers, .record_timing = timing});
        }
        if (*replay) {
            const std::string text = read_file(replay_manifest);
            auto config = ncgas::config_from_manifest(text);
            if (!replay_out.empty()) config.outputs.csv_path = replay_out;
            const auto artifacts = ncgas::run_sweep(config, {.workers = workers});
            if (!artifacts.complete) {
                std::cerr << "ncgas: estimator failure: " << artifacts.error << "\n";
                return kExitEstimator;
            }
            write_file(config.outputs.csv_path, artifacts.csv);
            std::cerr << "ncgas: wrote " << config.outputs.csv_path << "\n";
            return 0;
        }
        if (*verify) {
            bool ok = true;
            ncgas::acceptance::run_all({.workers = workers}, [&](const ncgas::acceptance::CriterionResult& r) {
                std::cout << ncgas::acceptance::format_result(r) << std::flush;
                ok = ok && r.passed;
            });
            std::cout << (ok ? "all acceptance criteria passed\n" : "acceptance FAILED\n");
            return ok ? 0 : kExitEstimator;
        }
    } catch (const ncgas::ParseError& e) {
        std::cerr << "ncgas: config " << e.what() << "\n";
        return kExitValidation;
    } catch (const ncgas::ValidationError& e) {
        std::cerr << "ncgas: invalid: " << e.what() << "\n";
        return kExitValidation;
    } catch (const ncgas::EstimatorError& e) {
        std::cerr << "ncgas: estimator failure: " << e.what() << "\n";
        return kExitEstimator;
    }
    return 0;
}
