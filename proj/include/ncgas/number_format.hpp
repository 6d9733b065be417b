#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace ncgas {

// Locale-independent number formatting (std::to_chars / from_chars).

/// Scientific notation with exactly 10 significant digits, e.g. 4.835831784e-02.
std::string format_sig10(double value);

/// Shortest string that parses back to the same double.
std::string format_shortest(double value);

/// Fixed notation with `decimals` digits after the point.
std::string format_fixed(double value, int decimals);

/// Whole-string parse; nullopt on trailing garbage or overflow.
std::optional<double> parse_double(std::string_view text);
std::optional<unsigned long long> parse_unsigned(std::string_view text);

std::string_view trim(std::string_view text) noexcept;

} // namespace ncgas
