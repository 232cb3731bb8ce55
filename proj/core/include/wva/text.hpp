#pragma once

// Small helpers for the plain-text formats (CSV) read and written by the toolkit.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wva {

/// Decimal text with `significant` significant digits; "inf"/"-inf"/"nan" for
/// non-finite values. Output is locale independent.
std::string format_decimal(double value, int significant = 12);

/// Parses a complete decimal field (surrounding blanks allowed).
std::optional<double> parse_double(std::string_view text);

std::string_view trim(std::string_view text);

/// Splits a CSV line on commas; fields are trimmed.
std::vector<std::string_view> split_fields(std::string_view line);

}  // namespace wva
