#include "ncgas/manifest.hpp"

#include "ncgas/energy.hpp"
#include "ncgas/errors.hpp"

namespace ncgas {

using nlohmann::json;

json build_manifest(const RunConfig& config, const SweepResult* result, std::string_view error, bool include_timing) {
    json m;
    m["schema"] = kManifestSchema;
    m["tool"] = {{"name", "ncgas"}, {"version", kToolVersion}};
    m["status"] = result ? "complete" : "aborted";
    if (!error.empty()) m["error"] = error;
    m["seed"] = config.sampler.seed;
    m["config"] = {
        {"rs_grid", config.rs_grid},
        {"tau_grid", config.tau_grid},
        {"sampler",
         {{"n_samples", config.sampler.n_samples},
          {"seed", config.sampler.seed},
          {"q_tail_scale", config.sampler.q_tail_scale},
          {"batch_size", config.sampler.batch_size},
          {"oracle_box", config.sampler.oracle_box}}},
        {"outputs",
         {{"csv", config.outputs.csv_path}, {"svg", config.outputs.svg_path}, {"manifest", config.outputs.manifest_path}}},
    };
    m["config_text"] = to_config_text(config);

    const auto& c = analytic_constants();
    m["constants"] = {{"prefactor", c.prefactor},   {"eps2b_exact", c.eps2b_exact},
                      {"c_fermi", c.c_fermi},       {"c_exchange", c.c_exchange},
                      {"c_log", c.c_log},           {"c_const_total", c.c_const_total}};

    json cells = json::array();
    if (result) {
        const std::size_t n_tau = config.tau_grid.size();
        for (std::size_t i = 0; i < result->rows.size(); ++i) {
            const auto& row = result->rows[i];
            const auto& est = result->eps2b_by_tau[i % n_tau];
            cells.push_back({{"rs", row.rs},
                             {"tau", row.tau},
                             {"eps2b", row.energy.eps2b},
                             {"eps2b_stderr", row.energy.eps2b_stderr},
                             {"total", row.energy.total},
                             {"total_stderr", row.energy.total_stderr},
                             {"n_samples", est.n_samples},
                             {"n_in_domain", est.n_in_domain},
                             {"acceptance_rate", est.acceptance_rate}});
        }
        if (include_timing) {
            m["wall_clock_seconds"] = {{"estimate", result->timings.estimate_seconds},
                                       {"assemble", result->timings.assemble_seconds},
                                       {"render", result->timings.render_seconds}};
        }
    }
    m["cells"] = std::move(cells);
    return m;
}

std::string dump_manifest(const json& manifest) { return manifest.dump(2) + "\n"; }

RunConfig config_from_manifest(std::string_view manifest_text) {
    json m;
    try {
        m = json::parse(manifest_text);
    } catch (const json::parse_error& err) {
        throw ValidationError(std::string("manifest: ") + err.what());
    }
    if (!m.is_object() || m.value("schema", "") != kManifestSchema || !m.contains("config_text") ||
        !m["config_text"].is_string()) {
        throw ValidationError("manifest: not an " + std::string(kManifestSchema) + " document");
    }
    return parse_config(m["config_text"].get<std::string>());
}

} // namespace ncgas
