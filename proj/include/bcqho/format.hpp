#pragma once

#include <charconv>
#include <string>

namespace bcqho {

// Shortest decimal representation that round-trips to the same double.
// Used for every numeric field the CLI emits, so output is byte-stable
// across runs and platforms with IEEE-754 doubles.
inline std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace bcqho
