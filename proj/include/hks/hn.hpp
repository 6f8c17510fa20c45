#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "hks/errors.hpp"
#include "hks/rational.hpp"

namespace hks {

/// One semistable quotient of a Harder-Narasimhan filtration, recorded as the
/// (rank, degree) of the quotient. The slope degree/rank is derived, so every
/// structural invariant stays checkable in integer arithmetic.
struct HNBlock {
  Int rank;    // >= 1
  Int degree;  // any integer

  Rational slope() const { return make_rational(degree, rank); }

  friend bool operator==(const HNBlock&, const HNBlock&) = default;
};

/// Harder-Narasimhan filtration data: the quotient blocks in strictly
/// decreasing slope order. Build one through validate_hn; all operations
/// below assume (and preserve) the invariants.
struct HNData {
  std::vector<HNBlock> blocks;  // t >= 1, slopes strictly decreasing

  std::size_t block_count() const { return blocks.size(); }

  Int total_rank() const {
    Int r = 0;
    for (const auto& b : blocks) r += b.rank;
    return r;
  }

  Int total_degree() const {
    Int d = 0;
    for (const auto& b : blocks) d += b.degree;
    return d;
  }

  friend bool operator==(const HNData&, const HNData&) = default;
};

/// Slopes listed with multiplicity: block k contributes its slope rank_k
/// times, so the vector is non-increasing of length total_rank.
using SlopeVector = std::vector<Rational>;

namespace detail {

// slope(a) > slope(b) via cross-multiplication; ranks are positive.
inline bool slope_greater(const HNBlock& a, const HNBlock& b) {
  return a.degree * b.rank > b.degree * a.rank;
}

inline bool slope_equal(const HNBlock& a, const HNBlock& b) {
  return a.degree * b.rank == b.degree * a.rank;
}

}  // namespace detail

/// Checks raw (rank, degree) pairs and returns them as HNData.
/// Throws NonPositiveRank or NonDecreasingSlopes (reporting the offending
/// adjacent pair); an empty list is rejected as ShapeMismatch.
inline HNData validate_hn(const std::vector<std::pair<Int, Int>>& blocks) {
  if (blocks.empty())
    throw ShapeMismatch("HN data needs at least one block");
  HNData s;
  s.blocks.reserve(blocks.size());
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const auto& [rank, degree] = blocks[k];
    if (rank <= 0)
      throw NonPositiveRank("block " + std::to_string(k + 1) + " has rank " +
                            to_string(rank));
    s.blocks.push_back(HNBlock{rank, degree});
  }
  for (std::size_t k = 0; k + 1 < s.blocks.size(); ++k) {
    if (!detail::slope_greater(s.blocks[k], s.blocks[k + 1]))
      throw NonDecreasingSlopes(
          "blocks " + std::to_string(k + 1) + " and " + std::to_string(k + 2) +
          " have slopes " + to_string(s.blocks[k].slope()) + " <= " +
          to_string(s.blocks[k + 1].slope()));
  }
  return s;
}

/// Hilbert-Kunz slope: sum over blocks of rank * slope^2 = degree^2 / rank.
inline Rational mu_hk(const HNData& s) {
  Rational acc = 0;
  for (const auto& b : s.blocks) acc += make_rational(b.degree * b.degree, b.rank);
  return acc;
}

/// Expands block slopes with multiplicity rank_k into a non-increasing vector.
inline SlopeVector expand_slopes(const HNData& s) {
  SlopeVector out;
  for (const auto& b : s.blocks) {
    const Rational mu = b.slope();
    for (Int i = 0; i < b.rank; ++i) out.push_back(mu);
  }
  return out;
}

/// Dual filtration: blocks reversed with degrees negated. Involution that
/// preserves mu_hk and negates total degree.
inline HNData dual(const HNData& s) {
  HNData out;
  out.blocks.reserve(s.blocks.size());
  for (auto it = s.blocks.rbegin(); it != s.blocks.rend(); ++it)
    out.blocks.push_back(HNBlock{it->rank, -it->degree});
  return out;
}

/// Tensor with a line bundle of degree l: every block (r, d) -> (r, d + r*l).
inline HNData twist(const HNData& s, const Int& l) {
  HNData out;
  out.blocks.reserve(s.blocks.size());
  for (const auto& b : s.blocks)
    out.blocks.push_back(HNBlock{b.rank, b.degree + b.rank * l});
  return out;
}

/// Merge of two filtrations by decreasing slope; equal-slope blocks coalesce
/// into one (a direct sum of semistables of equal slope is semistable, so the
/// canonical strictly-decreasing form demands it).
inline HNData direct_sum(const HNData& s, const HNData& t) {
  HNData out;
  std::size_t i = 0, j = 0;
  while (i < s.blocks.size() && j < t.blocks.size()) {
    const HNBlock& a = s.blocks[i];
    const HNBlock& b = t.blocks[j];
    if (detail::slope_equal(a, b)) {
      out.blocks.push_back(HNBlock{a.rank + b.rank, a.degree + b.degree});
      ++i;
      ++j;
    } else if (detail::slope_greater(a, b)) {
      out.blocks.push_back(a);
      ++i;
    } else {
      out.blocks.push_back(b);
      ++j;
    }
  }
  for (; i < s.blocks.size(); ++i) out.blocks.push_back(s.blocks[i]);
  for (; j < t.blocks.size(); ++j) out.blocks.push_back(t.blocks[j]);
  return out;
}

/// Tensor product of filtration data. Block pairs (i, j) contribute rank
/// r_i*r_j at slope mu_i + mu_j; the degree r_j*d_i + r_i*d_j stays integral
/// by construction. Pairs are merged and coalesced by slope.
inline HNData tensor(const HNData& s, const HNData& t) {
  std::vector<HNBlock> pairs;
  pairs.reserve(s.blocks.size() * t.blocks.size());
  for (const auto& a : s.blocks)
    for (const auto& b : t.blocks)
      pairs.push_back(
          HNBlock{a.rank * b.rank, b.rank * a.degree + a.rank * b.degree});
  std::sort(pairs.begin(), pairs.end(),
            [](const HNBlock& a, const HNBlock& b) {
              return detail::slope_greater(a, b);
            });
  HNData out;
  for (const auto& blk : pairs) {
    if (!out.blocks.empty() && detail::slope_equal(out.blocks.back(), blk)) {
      out.blocks.back().rank += blk.rank;
      out.blocks.back().degree += blk.degree;
    } else {
      out.blocks.push_back(blk);
    }
  }
  return out;
}

/// Pull-back along a finite degree-n cover: degrees scale by n, ranks stay.
inline HNData pullback(const HNData& s, const Int& n) {
  if (n < 1) throw InvalidArgument("pullback degree must be >= 1");
  HNData out;
  out.blocks.reserve(s.blocks.size());
  for (const auto& b : s.blocks)
    out.blocks.push_back(HNBlock{b.rank, n * b.degree});
  return out;
}

/// Semistability defect mu_hk(S) - deg(S)^2/rk(S). Nonnegative, zero exactly
/// for a single block, and invariant under twisting.
inline Rational ss_defect(const HNData& s) {
  const Int d = s.total_degree();
  return mu_hk(s) - make_rational(d * d, s.total_rank());
}

}  // namespace hks
