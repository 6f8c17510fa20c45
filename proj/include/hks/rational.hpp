#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "hks/errors.hpp"

namespace hks {

// The only scalar types of the library. Everything is exact: slopes and all
// derived invariants are rationals over arbitrary-precision integers, stored
// in lowest terms with the sign on the numerator.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// num/den as a canonical Rational. den must be nonzero; its sign is folded
/// into the numerator.
inline Rational make_rational(Int num, Int den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

inline std::string to_string(const Int& n) { return n.str(); }

/// Renders "p/q", or just "p" when the value is integral.
inline std::string to_string(const Rational& r) {
  const Int& den = denominator(r);
  if (den == 1) return numerator(r).str();
  return numerator(r).str() + "/" + den.str();
}

inline bool is_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

/// Parses an integer with optional leading sign.
inline Int parse_integer(const std::string& s) {
  const bool negative = !s.empty() && s[0] == '-';
  const std::string body =
      (!s.empty() && (s[0] == '+' || s[0] == '-')) ? s.substr(1) : s;
  if (!is_digits(body)) throw ParseError("not an integer: '" + s + "'");
  Int n(body);
  return negative ? -n : n;
}

/// Parses "p" or "p/q" with q a positive integer.
inline Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(s));
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!is_digits(den) || Int(den) == 0)
    throw ParseError("denominator must be a positive integer: '" + s + "'");
  return make_rational(parse_integer(num), Int(den));
}

}  // namespace hks
