#include <string>

#include "json.hpp"

#include "doctest.h"
#include "ncgas/errors.hpp"
#include "ncgas/manifest.hpp"
#include "ncgas/run_config.hpp"
#include "ncgas/svg.hpp"
#include "ncgas/sweep.hpp"

using namespace ncgas;

namespace {

RunConfig tiny_config() {
    return parse_config("rs_grid = 1, 2\ntau_grid = 0, 0.5, 5\nsamples = 20000\nbatch_size = 1000\nseed = 4\n"
                        "svg = plot.svg\n");
}

std::size_t count_of(const std::string& haystack, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
    return n;
}

} // namespace

TEST_CASE("CSV layout") {
    const auto run = run_sweep(tiny_config(), {.workers = 2});
    REQUIRE(run.complete);
    CHECK(run.csv.starts_with(std::string(kCsvHeader) + "\n"));
    CHECK(count_of(run.csv, "\n") == 1 + 2 * 3);
    CHECK(run.csv.back() == '\n');
    // 9 fields per row, 10-significant-digit scientific literals
    const auto second_line = run.csv.substr(kCsvHeader.size() + 1, run.csv.find('\n', kCsvHeader.size() + 1) -
                                                                         kCsvHeader.size() - 1);
    CHECK(count_of(second_line, ",") == 8);
    CHECK(second_line.starts_with("1.000000000e+00,0.000000000e+00,"));
}

TEST_CASE("rows share the tau estimate across r_s") {
    const auto result = evaluate_grid(tiny_config(), 1);
    REQUIRE(result.rows.size() == 6);
    for (std::size_t t = 0; t < 3; ++t) {
        CHECK(result.rows[t].energy.eps2b == result.rows[3 + t].energy.eps2b);
        CHECK(result.rows[t].rs == 1.0);
        CHECK(result.rows[3 + t].rs == 2.0);
    }
}

TEST_CASE("SVG output") {
    const auto run = run_sweep(tiny_config(), {.workers = 1});
    CHECK((run.svg.starts_with("<?xml") || run.svg.starts_with("<svg")));
    CHECK(run.svg.find("</svg>") != std::string::npos);
    CHECK(emit_svg(run.csv) == run.svg);
    const std::string one_row = std::string(kCsvHeader) +
                                "\n1.0e+00,0.0e+00,2.2e+00,-9.1e-01,-1.4e-01,4.8e-02,1.0e-03,1.2e+00,1.0e-03\n";
    CHECK_NOTHROW(emit_svg(one_row));
    CHECK_THROWS_AS(emit_svg("nonsense\n1,2\n"), ParseError);
    CHECK_THROWS_AS(emit_svg(std::string(kCsvHeader) + "\n1,2,3\n"), ParseError);
    CHECK_THROWS_AS(emit_svg(std::string(kCsvHeader) + "\n1,0,a,0,0,0,0,0,0\n"), ParseError);
    auto no_svg = tiny_config();
    no_svg.outputs.svg_path.clear();
    CHECK(run_sweep(no_svg, {.workers = 1}).svg.empty());
}

TEST_CASE("manifest contents and replay") {
    const auto cfg = tiny_config();
    const auto run = run_sweep(cfg, {.workers = 3});
    const auto doc = nlohmann::json::parse(run.manifest);
    CHECK(doc["schema"] == std::string(kManifestSchema));
    CHECK(doc["status"] == "complete");
    CHECK(doc["seed"] == 4);
    CHECK(doc["cells"].size() == 6);
    CHECK_FALSE(doc.contains("wall_clock_seconds"));
    CHECK(doc["cells"][0].contains("acceptance_rate"));

    const auto replayed = config_from_manifest(run.manifest);
    CHECK(replayed == cfg);
    const auto again = run_sweep(replayed, {.workers = 1});
    CHECK(again.csv == run.csv);
    CHECK(again.manifest == run.manifest);

    const auto timed = nlohmann::json::parse(run_sweep(cfg, {.workers = 1, .record_timing = true}).manifest);
    CHECK(timed.contains("wall_clock_seconds"));
}

TEST_CASE("aborted manifest") {
    const auto doc = nlohmann::json::parse(dump_manifest(build_manifest(tiny_config(), nullptr, "budget gone", false)));
    CHECK(doc["status"] == "aborted");
    CHECK(doc["error"] == "budget gone");
    CHECK(doc["cells"].empty());
    CHECK(config_from_manifest(dump_manifest(build_manifest(tiny_config(), nullptr, "x", false))) == tiny_config());
    CHECK_THROWS(config_from_manifest("{}"));
    CHECK_THROWS(config_from_manifest("not json"));
}
