#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "hks/errors.hpp"
#include "hks/hn.hpp"
#include "hks/rational.hpp"

namespace hks {

/// 1-based filtration level at which a cohomology class survives, i.e. the
/// smallest n with the class lifting to the n-th filtration step and hitting
/// the n-th quotient nontrivially. Absent means the class is zero.
using ClassLevel = std::optional<std::int64_t>;

/// Bounds reported when the extension's filtration cannot be written down
/// exactly: mu_hk of the extension is strictly below `strict_upper`, and at
/// least `lower` when that bound is known (single-block case only).
struct IndeterminateBound {
  Rational strict_upper;
  std::optional<Rational> lower;

  friend bool operator==(const IndeterminateBound&,
                         const IndeterminateBound&) = default;
};

/// Outcome of extending by the structure sheaf: either the exact filtration
/// data of the extension, or an indeterminate verdict with slope bounds.
/// Exactly one of the two members is set.
struct ExtensionResult {
  std::optional<HNData> exact;
  std::optional<IndeterminateBound> indeterminate;

  static ExtensionResult make_exact(HNData d) {
    return ExtensionResult{std::move(d), std::nullopt};
  }
  static ExtensionResult make_indeterminate(IndeterminateBound b) {
    return ExtensionResult{std::nullopt, std::move(b)};
  }

  bool is_exact() const { return exact.has_value(); }

  friend bool operator==(const ExtensionResult&,
                         const ExtensionResult&) = default;
};

namespace detail {

inline void check_level(const HNData& s, const ClassLevel& level) {
  if (!level) return;
  const auto t = static_cast<std::int64_t>(s.block_count());
  if (*level < 1 || *level > t)
    throw LevelOutOfRange("class level " + std::to_string(*level) +
                          " outside 1.." + std::to_string(t));
}

}  // namespace detail

/// Filtration data of the extension 0 -> S -> S' -> O -> 0 attached to a
/// class surviving at `level`.
///   - absent level: the extension splits, S' = S + O.
///   - level n with slope_n >= 0: exact. With i the last index of
///     nonnegative slope, a new rank-1 degree-0 quotient appears after block
///     i when slope_i > 0; when slope_i = 0 the extension enlarges block i
///     itself, which stays semistable of degree 0.
///   - level n with slope_n < 0: no exact description exists; mu_hk(S') is
///     strictly below mu_hk(S), with lower bound deg(S)^2/(rk(S)+1) exactly
///     when S is a single block.
inline ExtensionResult extension_hn(const HNData& s, const ClassLevel& level) {
  detail::check_level(s, level);
  if (!level)
    return ExtensionResult::make_exact(
        direct_sum(s, HNData{{HNBlock{1, 0}}}));

  const std::size_t n = static_cast<std::size_t>(*level);
  if (s.blocks[n - 1].degree < 0) {
    IndeterminateBound b;
    b.strict_upper = mu_hk(s);
    if (s.block_count() == 1) {
      const Int d = s.total_degree();
      b.lower = make_rational(d * d, s.total_rank() + 1);
    }
    return ExtensionResult::make_indeterminate(std::move(b));
  }

  // slope_n >= 0, so the last index i with slope_i >= 0 satisfies i >= n.
  std::size_t i = n;
  while (i < s.block_count() && s.blocks[i].degree >= 0) ++i;

  HNData out = s;
  if (out.blocks[i - 1].degree > 0) {
    out.blocks.insert(out.blocks.begin() + static_cast<std::ptrdiff_t>(i),
                      HNBlock{1, 0});
  } else {
    out.blocks[i - 1].rank += 1;  // degree-0 block absorbs the extension
  }
  return ExtensionResult::make_exact(std::move(out));
}

/// Whether the affine-linear torsor attached to the class is an affine
/// scheme: true exactly when the class survives at a level of negative
/// slope, i.e. some locally free quotient of S with negative maximal slope
/// receives it nontrivially.
inline bool is_affine_torsor(const HNData& s, const ClassLevel& level) {
  detail::check_level(s, level);
  return level && s.blocks[static_cast<std::size_t>(*level) - 1].degree < 0;
}

/// Whether mu_hk drops strictly when passing from S to the extension S'.
/// Equivalent to is_affine_torsor; provided so both faces of the criterion
/// are addressable by name.
inline bool hk_drops(const HNData& s, const ClassLevel& level) {
  return is_affine_torsor(s, level);
}

/// Verdict of the square-sum comparison between interleaved sequences.
struct NumkritReport {
  bool hypotheses_hold = false;
  bool inequality_holds = false;  // sum beta^2 <= sum alpha^2
  bool equality = false;          // sums of squares agree exactly

  friend bool operator==(const NumkritReport&, const NumkritReport&) = default;
};

/// Checks the numeric criterion for sequences alpha_1..alpha_r and
/// beta_1..beta_{r+1}: hypotheses are both sequences non-decreasing and
/// nonnegative, alpha_i >= beta_{i+1} for all i, and equal total sums.
/// Under the hypotheses sum beta_i^2 <= sum alpha_i^2, with equality exactly
/// when alpha_i = beta_{i+1} throughout. The square sums are compared
/// literally either way.
inline NumkritReport numkrit_check(const std::vector<Rational>& alphas,
                                   const std::vector<Rational>& betas) {
  if (betas.size() != alphas.size() + 1)
    throw LengthMismatch("need " + std::to_string(alphas.size() + 1) +
                         " betas for " + std::to_string(alphas.size()) +
                         " alphas, got " + std::to_string(betas.size()));

  bool hyp = std::is_sorted(alphas.begin(), alphas.end()) &&
             std::is_sorted(betas.begin(), betas.end());
  for (const auto& a : alphas)
    if (a < 0) hyp = false;
  for (const auto& b : betas)
    if (b < 0) hyp = false;
  Rational sum_a = 0, sum_b = 0, sq_a = 0, sq_b = 0;
  for (const auto& a : alphas) {
    sum_a += a;
    sq_a += a * a;
  }
  for (const auto& b : betas) {
    sum_b += b;
    sq_b += b * b;
  }
  for (std::size_t i = 0; i < alphas.size(); ++i)
    if (alphas[i] < betas[i + 1]) hyp = false;
  if (sum_a != sum_b) hyp = false;

  NumkritReport rep;
  rep.hypotheses_hold = hyp;
  rep.inequality_holds = sq_b <= sq_a;
  rep.equality = sq_b == sq_a;
  return rep;
}

/// Slope interleaving between the expanded slopes of a subsheaf (sigma) and
/// the ambient sheaf (tau): sigma_i <= tau_i for all i, or with shifted=true
/// the sharper sigma_i <= tau_{i+1} available when no filtration subsheaf is
/// shared.
inline bool interleave_check(const SlopeVector& sigma, const SlopeVector& tau,
                             bool shifted) {
  const std::size_t shift = shifted ? 1 : 0;
  if (sigma.size() + shift > tau.size())
    throw LengthMismatch("sigma length " + std::to_string(sigma.size()) +
                         (shifted ? " + 1" : "") + " exceeds tau length " +
                         std::to_string(tau.size()));
  for (std::size_t i = 0; i < sigma.size(); ++i)
    if (sigma[i] > tau[i + shift]) return false;
  return true;
}

/// mu_hk(S) - mu_hk(S') for S' of rank rk(S)+1, an exploratory probe for the
/// sign of the alternating slope sum along extensions. No sign is asserted:
/// the drop criterion guarantees >= 0 only for extensions by the structure
/// sheaf, and comparisons at other twists may go negative.
inline Rational hk_defect(const HNData& s, const HNData& sprime) {
  if (sprime.total_rank() != s.total_rank() + 1)
    throw ShapeMismatch("expected rank " + to_string(s.total_rank() + 1) +
                        ", got " + to_string(sprime.total_rank()));
  return mu_hk(s) - mu_hk(sprime);
}

}  // namespace hks
