#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace taildep::detail {

/// Shortest round-trip decimal representation; deterministic and
/// locale-independent, so serialized reports are byte-stable.
inline std::string format_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

inline void append_double(std::string& out, double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  out.append(buf, res.ptr);
}

}  // namespace taildep::detail
