#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hks/errors.hpp"
#include "hks/hn.hpp"
#include "hks/monomial.hpp"
#include "hks/rational.hpp"

namespace hks {

/// Splitting type of the syzygy bundle of the staircase generators on the
/// projective line: Syz(f_1,...,f_n)(0) is a direct sum of line bundles
/// O(-e_j), one per adjacent generator pair.
struct SyzygySplitting {
  std::vector<std::int64_t> e;  // ascending, length gen_count - 1

  friend bool operator==(const SyzygySplitting&,
                         const SyzygySplitting&) = default;
};

/// Syzygy twists from the length-one graded resolution of a two-variable
/// monomial ideal: the adjacent pair (f_j, f_{j+1}) contributes the Koszul
/// relation of degree e_j = a_{j+1} + b_j. The twists balance the generator
/// degrees: sum e_j = sum d_i.
inline SyzygySplitting syzygy_splitting(const MonomialIdeal& ideal) {
  const auto& g = ideal.gens();
  SyzygySplitting s;
  s.e.reserve(g.size() - 1);
  for (std::size_t j = 0; j + 1 < g.size(); ++j)
    s.e.push_back(g[j + 1].a + g[j].b);
  std::sort(s.e.begin(), s.e.end());
  return s;
}

/// Filtration data of Syz(f_1,...,f_n)(m) = sum of O(m - e_j): equal twists
/// coalesce into one block, blocks ordered by decreasing slope.
inline HNData syzygy_hn(const MonomialIdeal& ideal, std::int64_t m) {
  const SyzygySplitting s = syzygy_splitting(ideal);
  HNData out;
  // e ascending, so the twists m - e_j arrive in decreasing order; runs of
  // equal twists coalesce into one block.
  for (std::int64_t e : s.e) {
    const Int d = Int(m) - e;
    if (!out.blocks.empty() &&
        out.blocks.back().degree == d * out.blocks.back().rank) {
      out.blocks.back().rank += 1;
      out.blocks.back().degree += d;
    } else {
      out.blocks.push_back(HNBlock{1, d});
    }
  }
  return out;
}

/// Characteristic-zero Hilbert-Kunz multiplicity from filtration data of the
/// twist-zero syzygy bundle on a curve of degree degY:
///   (mu_hk(syz0) - degY^2 * sum d_i^2) / (2 * degY).
/// The shape preconditions pin syz0 to a presenting sequence of the stated
/// generator degrees: rank = n - 1 and degree = -degY * sum d_i.
inline Rational ehk_from_hn(std::int64_t deg_y,
                            const std::vector<std::int64_t>& degrees,
                            const HNData& syz0) {
  if (deg_y < 1) throw InvalidArgument("curve degree must be >= 1");
  for (std::int64_t d : degrees)
    if (d < 1) throw InvalidArgument("generator degrees must be >= 1");
  if (degrees.empty() ||
      syz0.total_rank() != Int(degrees.size()) - 1)
    throw ShapeMismatch("syzygy rank " + to_string(syz0.total_rank()) +
                        " does not match " + std::to_string(degrees.size()) +
                        " generators");
  Int sum_d = 0, sum_d2 = 0;
  for (std::int64_t d : degrees) {
    sum_d += d;
    sum_d2 += Int(d) * d;
  }
  if (syz0.total_degree() != -Int(deg_y) * sum_d)
    throw ShapeMismatch("syzygy degree " + to_string(syz0.total_degree()) +
                        " does not match -degY * sum of degrees = " +
                        to_string(-Int(deg_y) * sum_d));
  return (mu_hk(syz0) - Int(deg_y) * deg_y * sum_d2) /
         Rational(2 * Int(deg_y));
}

/// e_HK of a monomial ideal through the syzygy splitting on the projective
/// line. Agrees with ehk_oracle on every valid ideal; the agreement is
/// asserted in tests, never assumed here.
inline Rational ehk(const MonomialIdeal& ideal) {
  return ehk_from_hn(1, ideal.degrees(), syzygy_hn(ideal, 0));
}

/// Ground-truth e_HK by staircase counting: colength(I^[q]) / q^2 must be
/// one and the same number for q = 1, 2, 3 (Frobenius powers of monomial
/// ideals scale the staircase exactly). A disagreement means a counting bug,
/// reported as OracleInconsistency.
inline Rational ehk_oracle(const MonomialIdeal& ideal) {
  const Int c1 = colength(ideal);
  for (std::int64_t q : {2, 3}) {
    const Int cq = colength(bracket_power(ideal, q));
    if (cq != Int(q) * q * c1)
      throw OracleInconsistency(
          "colength(I^[" + std::to_string(q) + "]) = " + to_string(cq) +
          " but q^2 * colength(I) = " + to_string(Int(q) * q * c1));
  }
  return Rational(c1);
}

/// Membership in the solid closure decided through Hilbert-Kunz
/// multiplicities: f lies in the closure exactly when adjoining it leaves
/// e_HK unchanged. Adjoining 1 yields the unit ideal, whose e_HK is 0.
inline bool membership_via_hk(const MonomialIdeal& ideal, const Monomial& f) {
  if (f.a == 0 && f.b == 0) return ehk(ideal) == 0;
  std::vector<Monomial> gens = ideal.gens();
  gens.push_back(f);
  return ehk(ideal) == ehk(minimalize(std::move(gens)));
}

/// Self-consistency of the multiplicity/slope bridge on one instance:
/// e_HK(I) = e_HK((I,f)) must hold exactly when the twisted syzygy bundles
/// of I and (I,f) at twist m = deg f have equal mu_hk. Returns whether the
/// biconditional holds. f = 1 is rejected: the unit ideal has no syzygy
/// bundle of the required shape.
inline bool hk_slope_bridge_check(const MonomialIdeal& ideal,
                                  const Monomial& f) {
  if (f.a == 0 && f.b == 0)
    throw InvalidArgument("bridge check undefined for f = 1");
  std::vector<Monomial> gens = ideal.gens();
  gens.push_back(f);
  const MonomialIdeal joined = minimalize(std::move(gens));
  const bool ehk_equal = ehk(ideal) == ehk(joined);
  const std::int64_t m = f.degree();
  const bool slope_equal =
      mu_hk(syzygy_hn(ideal, m)) == mu_hk(syzygy_hn(joined, m));
  return ehk_equal == slope_equal;
}

}  // namespace hks
