#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "facecode/error.hpp"

namespace facecode {

using Rational = boost::multiprecision::cpp_rational;
using Point = std::vector<Rational>;

/// Parses "p/q" or "p" (optional leading '-').
inline Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  require(is_int(num), ErrorKind::InvalidInput, "bad rational '" + std::string(text) + "'");
  using boost::multiprecision::cpp_int;
  auto to_int = [](std::string_view s) {
    if (s.front() == '+') s.remove_prefix(1);
    return cpp_int{std::string(s)};
  };
  if (slash == std::string_view::npos) return Rational(to_int(num));
  const auto den = text.substr(slash + 1);
  require(is_int(den) && den.front() != '-', ErrorKind::InvalidInput, "bad rational '" + std::string(text) + "'");
  const cpp_int d = to_int(den);
  require(d != 0, ErrorKind::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  return Rational(to_int(num), d);
}

/// Canonical "p/q" form with q >= 1.
inline std::string format_rational(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace facecode
