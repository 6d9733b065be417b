#pragma once

// Built-in acceptance suite: one check per criterion, each pinned to a fixed
// seed and sample budget so the verdicts are reproducible.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ncgas/vec3.hpp"

namespace ncgas::acceptance {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::vector<std::string> details; ///< one line per sub-check
};

struct Options {
    unsigned workers = 0;
    std::uint64_t seed = 42;
};

using Criterion = std::function<CriterionResult(const Options&)>;

CriterionResult commutative_value(const Options& opts);   // 1
CriterionResult energy_coefficients(const Options& opts);  // 2
CriterionResult zero_tau_reduction(const Options& opts);  // 3
CriterionResult small_tau_law(const Options& opts);       // 4
CriterionResult large_tau_decay(const Options& opts);     // 5
CriterionResult reality(const Options& opts);             // 6
CriterionResult estimator_soundness(const Options& opts); // 7
CriterionResult determinism(const Options& opts);         // 8

const std::vector<Criterion>& all_criteria();

/// Runs every criterion; `on_result` is called after each one.
std::vector<CriterionResult> run_all(const Options& opts,
                                     const std::function<void(const CriterionResult&)>& on_result = {});

/// One line per criterion: "[PASS] 1 title" followed by indented details.
std::string format_result(const CriterionResult& result);

/// Deterministic unit vectors spread over the sphere (Philox stream).
std::vector<Vec3> random_directions(std::size_t count, std::uint64_t seed);

/// Leading large-|q| tail of the R integral outside the cube [-L, L]^3.
/// The k, p and angle integrated R integrand is C/Q^2 + O(Q^-4) with
/// C = (4/45)(4 pi)^3, giving (C / 4 pi) (S / L), S = integral over the
/// unit sphere of max(|x|,|y|,|z|).
double r_cube_tail(double half_width);

} // namespace ncgas::acceptance
