#pragma once

#include <string>
#include <string_view>

namespace ncgas {

/// Two static panels rendered from a run_sweep CSV: eps2b vs tau with error
/// bars, and total energy vs tau; one series per r_s. Byte-deterministic.
/// Throws ParseError on a malformed CSV.
std::string emit_svg(std::string_view csv);

} // namespace ncgas
