#include "ncgas/run_config.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <sstream>

#include "ncgas/errors.hpp"
#include "ncgas/number_format.hpp"

namespace ncgas {

namespace {

const std::set<std::string, std::less<>> kKnownKeys{"rs_grid", "tau_grid", "samples",  "seed", "q_tail_scale",
                                                   "batch_size", "oracle_box", "out", "svg", "manifest"};

struct Entry {
    std::string value;
    std::size_t line; // 0 for command-line overrides
};

[[noreturn]] void invalid(std::string_view key, const std::string& why) {
    throw ValidationError(std::string(key) + ": " + why);
}

std::vector<double> grid_or_throw(std::string_view key, const Entry& e) {
    try {
        return parse_grid(e.value);
    } catch (const ValidationError& err) {
        invalid(key, err.what());
    }
}

// Counts accept plain integers or integral scientific literals like 1e7.
std::uint64_t count_or_throw(std::string_view key, const Entry& e) {
    if (auto v = parse_unsigned(e.value)) return *v;
    const auto d = parse_double(e.value);
    if (d && *d >= 0.0 && *d <= 9.2e18 && std::floor(*d) == *d) return static_cast<std::uint64_t>(*d);
    invalid(key, "expected a non-negative integer, got '" + e.value + "'");
}

double real_or_throw(std::string_view key, const Entry& e) {
    const auto d = parse_double(e.value);
    if (!d || !std::isfinite(*d)) invalid(key, "expected a finite number, got '" + e.value + "'");
    return *d;
}

std::string join_grid(const std::vector<double>& grid) {
    std::string out;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (i) out += ", ";
        out += format_shortest(grid[i]);
    }
    return out;
}

} // namespace

std::vector<double> parse_grid(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw ValidationError("empty grid");
    std::vector<double> out;
    if (text.find(':') != std::string_view::npos) {
        std::vector<double> parts;
        std::size_t start = 0;
        for (;;) {
            const auto colon = text.find(':', start);
            const auto piece = text.substr(start, colon == std::string_view::npos ? text.npos : colon - start);
            const auto v = parse_double(piece);
            if (!v || !std::isfinite(*v)) throw ValidationError("bad range component '" + std::string(piece) + "'");
            parts.push_back(*v);
            if (colon == std::string_view::npos) break;
            start = colon + 1;
        }
        if (parts.size() != 3) throw ValidationError("range must be start:stop:step");
        const double first = parts[0], last = parts[1], step = parts[2];
        if (!(step > 0.0)) throw ValidationError("range step must be > 0");
        if (last < first) throw ValidationError("range stop must be >= start");
        const double span = (last - first) / step;
        if (span > 1e7) throw ValidationError("range has too many points");
        const auto n = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
        for (std::size_t i = 0; i < n; ++i) out.push_back(first + static_cast<double>(i) * step);
        return out;
    }
    std::size_t start = 0;
    for (;;) {
        const auto comma = text.find(',', start);
        const auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        const auto v = parse_double(piece);
        if (!v || !std::isfinite(*v)) throw ValidationError("bad grid value '" + std::string(trim(piece)) + "'");
        out.push_back(*v);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

void RunConfig::validate() const {
    auto check_grid = [](std::string_view key, const std::vector<double>& grid, bool allow_zero) {
        if (grid.empty()) invalid(key, "grid must not be empty");
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double v = grid[i];
            if (!std::isfinite(v) || (allow_zero ? v < 0.0 : v <= 0.0)) {
                invalid(key, allow_zero ? "values must be >= 0" : "values must be > 0");
            }
            if (i > 0 && !(grid[i - 1] < v)) invalid(key, "grid must be strictly increasing");
        }
    };
    check_grid("rs_grid", rs_grid, false);
    check_grid("tau_grid", tau_grid, true);
    if (sampler.n_samples == 0) invalid("samples", "must be >= 1");
    if (sampler.batch_size == 0) invalid("batch_size", "must be >= 1");
    if (sampler.n_samples < sampler.batch_size) invalid("batch_size", "must not exceed samples");
    if (!(sampler.q_tail_scale > 0.0 && sampler.q_tail_scale <= 100.0)) invalid("q_tail_scale", "must lie in (0, 100]");
    if (!(sampler.oracle_box >= 3.0)) invalid("oracle_box", "must be >= 3");
    if (outputs.csv_path.empty()) invalid("out", "path must not be empty");
    if (outputs.manifest_path.empty()) invalid("manifest", "path must not be empty");
}

RunConfig parse_config(std::string_view text, const ConfigOverrides& overrides) {
    std::map<std::string, Entry, std::less<>> entries;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key.empty()) throw ParseError(line_no, "missing key");
        if (!kKnownKeys.contains(key)) throw ParseError(line_no, "unknown key '" + key + "'");
        if (value.empty()) throw ParseError(line_no, "missing value for '" + key + "'");
        if (entries.contains(key)) throw ParseError(line_no, "duplicate key '" + key + "'");
        entries.emplace(key, Entry{value, line_no});
    }
    for (const auto& [key, value] : overrides) {
        if (!kKnownKeys.contains(key)) throw ValidationError(key + ": unknown key");
        entries.insert_or_assign(key, Entry{value, 0});
    }

    auto find = [&](std::string_view key) -> const Entry* {
        const auto it = entries.find(key);
        return it == entries.end() ? nullptr : &it->second;
    };

    RunConfig cfg;
    if (const Entry* e = find("rs_grid")) cfg.rs_grid = grid_or_throw("rs_grid", *e);
    else invalid("rs_grid", "required key is missing");
    if (const Entry* e = find("tau_grid")) cfg.tau_grid = grid_or_throw("tau_grid", *e);
    else invalid("tau_grid", "required key is missing");

    cfg.sampler.n_samples = kDefaultSamples;
    cfg.sampler.seed = kDefaultSeed;
    if (const Entry* e = find("samples")) cfg.sampler.n_samples = count_or_throw("samples", *e);
    if (const Entry* e = find("seed")) {
        const auto v = parse_unsigned(e->value);
        if (!v) invalid("seed", "must be an unsigned 64-bit integer, got '" + e->value + "'");
        cfg.sampler.seed = *v;
    }
    if (const Entry* e = find("q_tail_scale")) cfg.sampler.q_tail_scale = real_or_throw("q_tail_scale", *e);
    if (const Entry* e = find("oracle_box")) cfg.sampler.oracle_box = real_or_throw("oracle_box", *e);
    if (const Entry* e = find("batch_size")) {
        cfg.sampler.batch_size = count_or_throw("batch_size", *e);
    } else {
        cfg.sampler.batch_size = std::max<std::uint64_t>(1, std::min(kDefaultBatchSize, cfg.sampler.n_samples));
    }
    if (const Entry* e = find("out")) cfg.outputs.csv_path = e->value;
    if (const Entry* e = find("svg")) cfg.outputs.svg_path = e->value;
    if (const Entry* e = find("manifest")) cfg.outputs.manifest_path = e->value;

    cfg.validate();
    return cfg;
}

std::string to_config_text(const RunConfig& c) {
    std::ostringstream os;
    os << "rs_grid = " << join_grid(c.rs_grid) << '\n';
    os << "tau_grid = " << join_grid(c.tau_grid) << '\n';
    os << "samples = " << c.sampler.n_samples << '\n';
    os << "seed = " << c.sampler.seed << '\n';
    os << "q_tail_scale = " << format_shortest(c.sampler.q_tail_scale) << '\n';
    os << "batch_size = " << c.sampler.batch_size << '\n';
    os << "oracle_box = " << format_shortest(c.sampler.oracle_box) << '\n';
    os << "out = " << c.outputs.csv_path << '\n';
    if (!c.outputs.svg_path.empty()) os << "svg = " << c.outputs.svg_path << '\n';
    os << "manifest = " << c.outputs.manifest_path << '\n';
    return os.str();
}

} // namespace ncgas
