#pragma once

// Line-oriented run configuration:
//
//   # comment
//   rs_grid      = 1, 2, 5          # comma list, or start:stop:step
//   tau_grid     = 0:0.1:0.025
//   samples      = 10000000
//   seed         = 42
//   q_tail_scale = 2
//   batch_size   = 65536
//   oracle_box   = 10
//   out          = results.csv
//   svg          = plot.svg
//   manifest     = manifest.json

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ncgas/sampler.hpp"

namespace ncgas {

struct OutputPaths {
    std::string csv_path = "results.csv";
    std::string svg_path; ///< empty: no plot
    std::string manifest_path = "manifest.json";

    friend bool operator==(const OutputPaths&, const OutputPaths&) = default;
};

struct RunConfig {
    std::vector<double> rs_grid;
    std::vector<double> tau_grid;
    SamplerConfig sampler;
    OutputPaths outputs;

    /// Throws ValidationError naming the offending key.
    void validate() const;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Key overrides applied as if they replaced the document's lines
/// (command-line flags use the same key names).
using ConfigOverrides = std::map<std::string, std::string, std::less<>>;

inline constexpr std::uint64_t kDefaultSamples = 10'000'000;
inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr std::uint64_t kDefaultBatchSize = 65'536;

/// Parses and validates a config document. Syntax problems throw ParseError
/// with the line number; semantic problems throw ValidationError naming the
/// key. When batch_size is not given it defaults to min(65536, samples).
RunConfig parse_config(std::string_view text, const ConfigOverrides& overrides = {});

/// Expands "start:stop:step" (inclusive of stop) or "a, b, c".
std::vector<double> parse_grid(std::string_view text);

/// Canonical document for `config`; parse_config(to_config_text(c)) == c.
std::string to_config_text(const RunConfig& config);

} // namespace ncgas
