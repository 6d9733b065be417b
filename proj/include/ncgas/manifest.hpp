#pragma once

// Run manifest (JSON), schema "ncgas-manifest/1":
//
//   schema, tool {name, version}, status ("complete" | "aborted"), error?,
//   seed, config {structured echo}, config_text (canonical config document),
//   constants {...}, cells [{rs, tau, eps2b, eps2b_stderr, total,
//   total_stderr, n_samples, n_in_domain, acceptance_rate}],
//   wall_clock_seconds {estimate, assemble, render}  (only with timing)

#include <string>
#include <string_view>

#include "json.hpp"

#include "ncgas/run_config.hpp"
#include "ncgas/sweep.hpp"

namespace ncgas {

inline constexpr std::string_view kToolVersion = "1.0.0";
inline constexpr std::string_view kManifestSchema = "ncgas-manifest/1";

/// `result` may be null for an aborted run.
nlohmann::json build_manifest(const RunConfig& config, const SweepResult* result, std::string_view error,
                              bool include_timing);

std::string dump_manifest(const nlohmann::json& manifest);

/// Recovers the RunConfig echoed in a manifest (via its config_text).
RunConfig config_from_manifest(std::string_view manifest_text);

} // namespace ncgas
