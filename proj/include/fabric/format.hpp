#pragma once

// Locale-independent number formatting shared by the CSV and SVG writers.

#include <charconv>
#include <string>

namespace fabric {

/// General format with the given number of significant digits.
inline std::string format_double(double value, int significant_digits) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::general, significant_digits);
  return std::string(buf, res.ptr);
}

/// Shortest representation that round-trips.
inline std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

}  // namespace fabric
