#pragma once

#include <cctype>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "hks/enumerate.hpp"
#include "hks/errors.hpp"
#include "hks/extension.hpp"
#include "hks/hn.hpp"
#include "hks/monomial.hpp"
#include "hks/rational.hpp"

namespace hks {

// Wire formats shared by the CLI and any embedding:
//   HNData          [[r1,d1],[r2,d2],...]   blocks in decreasing-slope order
//   Rational        "p/q" or "n" on output; integers also accepted on input
//   ClassLevel      integer or null
//   ExtensionResult {"exact": ...} | {"indeterminate": {...}}
//   Monomial        "x^2*y^3" or [2,3]; ideals "y^2, x*y, x^2" or [[0,2],...]

inline std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

inline nlohmann::json parse_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON: '" + text + "'");
  return j;
}

inline Int int_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw ParseError("expected an integer, got " + j.dump());
}

template <class J>
J int_to_json(const Int& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() &&
      n <= std::numeric_limits<std::int64_t>::max())
    return J(n.convert_to<std::int64_t>());
  return J(n.str());
}

inline Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Rational(j.get<std::uint64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected a rational ('p/q' or integer), got " + j.dump());
}

inline std::vector<Rational> rationals_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(rational_from_json(v));
  return out;
}

inline HNData hn_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("HN data must be [[rank,degree],...]");
  std::vector<std::pair<Int, Int>> raw;
  raw.reserve(j.size());
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2)
      throw ParseError("HN block must be a [rank, degree] pair, got " +
                       entry.dump());
    raw.emplace_back(int_from_json(entry[0]), int_from_json(entry[1]));
  }
  return validate_hn(raw);
}

template <class J>
J hn_to_json(const HNData& s) {
  J out = J::array();
  for (const auto& b : s.blocks) {
    J pair = J::array();
    pair.push_back(int_to_json<J>(b.rank));
    pair.push_back(int_to_json<J>(b.degree));
    out.push_back(std::move(pair));
  }
  return out;
}

template <class J>
J extension_result_to_json(const ExtensionResult& r) {
  J out = J::object();
  if (r.exact) {
    out["exact"] = hn_to_json<J>(*r.exact);
  } else {
    J bound = J::object();
    bound["strict_upper"] = to_string(r.indeterminate->strict_upper);
    bound["lower"] = r.indeterminate->lower
                         ? J(to_string(*r.indeterminate->lower))
                         : J(nullptr);
    out["indeterminate"] = std::move(bound);
  }
  return out;
}

/// Monomial from "x^2*y^3" style products, "1", or a JSON [a,b] pair.
inline Monomial parse_monomial(const std::string& text) {
  const std::string s = trim(text);
  if (s.empty()) throw ParseError("empty monomial");
  if (s[0] == '[') {
    const nlohmann::json j = parse_json(s);
    if (!j.is_array() || j.size() != 2)
      throw ParseError("monomial pair must be [a,b], got '" + s + "'");
    const Int a = int_from_json(j[0]), b = int_from_json(j[1]);
    if (a < 0 || b < 0 || a > std::numeric_limits<std::int64_t>::max() ||
        b > std::numeric_limits<std::int64_t>::max())
      throw ParseError("monomial exponents must be nonnegative: '" + s + "'");
    return Monomial{a.convert_to<std::int64_t>(), b.convert_to<std::int64_t>()};
  }

  Monomial m;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t star = s.find('*', pos);
    if (star == std::string::npos) star = s.size();
    const std::string factor = trim(s.substr(pos, star - pos));
    pos = star + 1;
    if (factor == "1") continue;
    if (factor.empty()) throw ParseError("empty factor in '" + s + "'");
    if (factor[0] != 'x' && factor[0] != 'y')
      throw ParseError("monomial factor must be x^k or y^k, got '" + factor +
                       "'");
    std::int64_t exp = 1;
    if (factor.size() > 1) {
      if (factor[1] != '^' || factor.size() == 2 ||
          !is_digits(factor.substr(2)))
        throw ParseError("monomial factor must be x^k or y^k, got '" + factor +
                         "'");
      const Int e(factor.substr(2));
      if (e > std::numeric_limits<std::int64_t>::max())
        throw ParseError("exponent out of range in '" + factor + "'");
      exp = e.convert_to<std::int64_t>();
    }
    if (factor[0] == 'x')
      m.a += exp;
    else
      m.b += exp;
  }
  return m;
}

/// Raw generator list from "y^2, x*y, x^2" or a JSON array of [a,b] pairs.
/// Minimalization is the caller's step.
inline std::vector<Monomial> parse_generators(const std::string& text) {
  const std::string s = trim(text);
  if (s.empty()) throw ParseError("empty generator list");
  std::vector<Monomial> out;
  if (s[0] == '[') {
    const nlohmann::json j = parse_json(s);
    if (!j.is_array() || j.empty())
      throw ParseError("ideal must be a nonempty JSON array of [a,b] pairs");
    for (const auto& entry : j) out.push_back(parse_monomial(entry.dump()));
    return out;
  }
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    out.push_back(parse_monomial(s.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

/// Class level from "null" (zero class) or a 1-based integer.
inline ClassLevel parse_class_level(const std::string& text) {
  const std::string s = trim(text);
  if (s == "null") return std::nullopt;
  const Int n = parse_integer(s);
  if (n < std::numeric_limits<std::int64_t>::min() ||
      n > std::numeric_limits<std::int64_t>::max())
    throw ParseError("class level out of range: '" + s + "'");
  return n.convert_to<std::int64_t>();
}

template <class J>
J sweep_summary_to_json(const SweepSummary& s) {
  J out = J::object();
  out["max_degree"] = s.max_degree;
  out["ideals"] = s.ideals;
  out["ehk_agreements"] = s.ehk_agreements;
  out["pairs"] = s.pairs;
  out["membership_agreements"] = s.membership_agreements;
  out["growth_pairs"] = s.growth_pairs;
  out["mu_hk_drops"] = s.mu_hk_drops;
  out["interleave_ok"] = s.interleave_ok;
  out["shifted_pairs"] = s.shifted_pairs;
  out["shifted_ok"] = s.shifted_ok;
  out["contained_pairs"] = s.contained_pairs;
  out["ideal_unchanged"] = s.ideal_unchanged;
  out["bridge_pairs"] = s.bridge_pairs;
  out["bridge_ok"] = s.bridge_ok;
  out["violations"] = s.violations();
  return out;
}

}  // namespace hks
