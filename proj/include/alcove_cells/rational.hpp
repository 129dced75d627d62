#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "alcove_cells/errors.hpp"

namespace alcove_cells {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

/// floor(r) as a machine integer; throws if it does not fit.
inline std::int64_t floor_to_int(const Rational& r) {
  Integer num = boost::multiprecision::numerator(r);
  Integer den = boost::multiprecision::denominator(r);
  Integer q = num / den;  // truncates toward zero
  if (num % den != 0 && num < 0) {
    q -= 1;
  }
  if (q > std::numeric_limits<std::int64_t>::max() ||
      q < std::numeric_limits<std::int64_t>::min()) {
    throw ResourceLimit("integer part out of range: " + q.str());
  }
  return q.convert_to<std::int64_t>();
}

/// Exact integer value; throws PreconditionError when r is not integral.
inline std::int64_t to_int(const Rational& r) {
  if (!is_integer(r)) {
    throw PreconditionError("expected an integer, got " + r.str());
  }
  return floor_to_int(r);
}

/// "num/den" for proper fractions, "num" for integers.
inline std::string to_string(const Rational& r) { return r.str(); }

/// Accepts "a", "-a", "a/b". Whitespace is not allowed.
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) -> Integer {
    std::size_t k = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) k = 1;
    if (k == s.size()) throw ParseError("malformed rational '" + std::string(text) + "'");
    for (std::size_t i = k; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw ParseError("malformed rational '" + std::string(text) + "'");
      }
    }
    return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer num = parse_int(text.substr(0, slash));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

}  // namespace alcove_cells
