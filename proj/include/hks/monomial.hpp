#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hks/errors.hpp"
#include "hks/rational.hpp"

namespace hks {

/// Monomial x^a y^b in the two-variable standard-graded polynomial ring.
struct Monomial {
  std::int64_t a = 0;  // exponent of x, >= 0
  std::int64_t b = 0;  // exponent of y, >= 0

  std::int64_t degree() const { return a + b; }

  bool divides(const Monomial& f) const { return a <= f.a && b <= f.b; }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class MonomialIdeal;
inline MonomialIdeal minimalize(std::vector<Monomial> raw);

/// (x,y)-primary monomial ideal, stored as its minimal staircase: generators
/// sorted by a strictly ascending (hence b strictly descending), the first a
/// pure y-power and the last a pure x-power. Construct via minimalize.
class MonomialIdeal {
public:
  const std::vector<Monomial>& gens() const { return gens_; }
  std::size_t gen_count() const { return gens_.size(); }

  std::vector<std::int64_t> degrees() const {
    std::vector<std::int64_t> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_) out.push_back(g.degree());
    return out;
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  friend MonomialIdeal minimalize(std::vector<Monomial> raw);
  friend MonomialIdeal bracket_power(const MonomialIdeal& ideal,
                                     std::int64_t q);
  explicit MonomialIdeal(std::vector<Monomial> gens)
      : gens_(std::move(gens)) {}

  std::vector<Monomial> gens_;
};

/// Drops every monomial divisible by another, sorts the survivors into
/// staircase order and checks primality: the minimal set must contain a pure
/// x-power and a pure y-power and generate a proper ideal (at least two
/// generators; the unit ideal is rejected).
inline MonomialIdeal minimalize(std::vector<Monomial> raw) {
  if (raw.empty()) throw NotPrimary("empty generator set");
  for (const auto& m : raw)
    if (m.a < 0 || m.b < 0)
      throw InvalidArgument("negative exponent in generator");

  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<Monomial> minimal;
  for (const auto& m : raw) {
    bool redundant = false;
    for (const auto& g : raw) {
      if (g != m && g.divides(m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(m);
  }
  // lexicographic sort above already yields a ascending; for a minimal set
  // the a's are distinct and the b's strictly descend.
  if (minimal.size() < 2)
    throw NotPrimary("needs a pure x-power and a pure y-power generator");
  if (minimal.front().a != 0)
    throw NotPrimary("no pure y-power among minimal generators");
  if (minimal.back().b != 0)
    throw NotPrimary("no pure x-power among minimal generators");
  return MonomialIdeal(std::move(minimal));
}

/// Number of monomials outside the ideal, summed rectangle-by-rectangle
/// along the staircase.
inline Int colength(const MonomialIdeal& ideal) {
  const auto& g = ideal.gens();
  Int count = 0;
  for (std::size_t j = 0; j + 1 < g.size(); ++j)
    count += Int(g[j + 1].a) * (Int(g[j].b) - Int(g[j + 1].b));
  return count;
}

/// Ideal generated by the q-th powers of the generators; for monomials this
/// scales every exponent by q and preserves minimality and primality.
inline MonomialIdeal bracket_power(const MonomialIdeal& ideal,
                                   std::int64_t q) {
  if (q < 1) throw InvalidArgument("bracket power needs q >= 1");
  constexpr std::int64_t kMax = INT64_MAX;
  std::vector<Monomial> gens;
  gens.reserve(ideal.gen_count());
  for (const auto& g : ideal.gens()) {
    if ((g.a != 0 && q > kMax / g.a) || (g.b != 0 && q > kMax / g.b))
      throw InvalidArgument("bracket power exponent overflow");
    gens.push_back(Monomial{g.a * q, g.b * q});
  }
  return MonomialIdeal(std::move(gens));
}

/// Ideal membership by divisibility against the minimal generators. In the
/// regular two-variable ring this is the ground truth the slope-based
/// membership route must reproduce.
inline bool membership_direct(const MonomialIdeal& ideal, const Monomial& f) {
  for (const auto& g : ideal.gens())
    if (g.divides(f)) return true;
  return false;
}

}  // namespace hks
