#pragma once

// Deterministic random-value generators shared by the property tests and the
// acceptance sweeps.

#include <random>
#include <utility>
#include <vector>

#include "hks/hn.hpp"
#include "hks/rational.hpp"

namespace hks::testgen {

/// Random valid HNData: up to max_blocks blocks, ranks in 1..max_rank,
/// degrees in -max_abs_degree..max_abs_degree, distinct slopes.
inline HNData random_hn(std::mt19937_64& rng, int max_blocks = 5,
                        int max_rank = 6, int max_abs_degree = 50) {
  std::uniform_int_distribution<int> block_count(1, max_blocks);
  std::uniform_int_distribution<int> rank_dist(1, max_rank);
  std::uniform_int_distribution<int> degree_dist(-max_abs_degree,
                                                 max_abs_degree);
  const int t = block_count(rng);
  std::vector<HNBlock> blocks;
  while (static_cast<int>(blocks.size()) < t) {
    const HNBlock cand{rank_dist(rng), degree_dist(rng)};
    bool fresh = true;
    for (const auto& b : blocks)
      if (detail::slope_equal(b, cand)) fresh = false;
    if (fresh) blocks.push_back(cand);
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const HNBlock& x, const HNBlock& y) {
              return detail::slope_greater(x, y);
            });
  return HNData{std::move(blocks)};
}

/// Random nonnegative rational with denominator in 1..max_den.
inline Rational random_nonneg_rational(std::mt19937_64& rng,
                                       int max_num = 40, int max_den = 4) {
  std::uniform_int_distribution<int> num(0, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return make_rational(num(rng), den(rng));
}

/// Random signed rational.
inline Rational random_rational(std::mt19937_64& rng, int max_abs_num = 40,
                                int max_den = 4) {
  std::uniform_int_distribution<int> num(-max_abs_num, max_abs_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return make_rational(num(rng), den(rng));
}

/// Instance of the square-sum comparison built from its equality
/// decomposition: alpha non-decreasing nonnegative, beta_1 = sum of deltas,
/// beta_{i+1} = alpha_i - delta_i. Returns (alpha, beta, all_deltas_zero);
/// retries until the construction filters (beta non-decreasing, nonnegative)
/// accept.
struct NumkritInstance {
  std::vector<Rational> alphas;
  std::vector<Rational> betas;
  bool deltas_all_zero = true;
};

inline NumkritInstance random_numkrit_instance(std::mt19937_64& rng,
                                               int max_len = 6) {
  std::uniform_int_distribution<int> len_dist(1, max_len);
  std::uniform_int_distribution<int> zero_dist(0, 3);
  std::uniform_int_distribution<int> frac_dist(0, 8);
  for (;;) {
    NumkritInstance inst;
    const int r = len_dist(rng);
    inst.alphas.reserve(r);
    for (int i = 0; i < r; ++i)
      inst.alphas.push_back(random_nonneg_rational(rng));
    std::sort(inst.alphas.begin(), inst.alphas.end());

    const bool force_zero = zero_dist(rng) == 0;
    std::vector<Rational> deltas(r, Rational(0));
    if (!force_zero) {
      for (int i = 0; i < r; ++i)
        deltas[i] = inst.alphas[static_cast<std::size_t>(i)] *
                    make_rational(frac_dist(rng), 64);
    }

    Rational delta_sum = 0;
    for (const auto& d : deltas) {
      delta_sum += d;
      if (d != 0) inst.deltas_all_zero = false;
    }
    inst.betas.push_back(delta_sum);
    for (int i = 0; i < r; ++i)
      inst.betas.push_back(inst.alphas[static_cast<std::size_t>(i)] -
                           deltas[static_cast<std::size_t>(i)]);

    bool ok = true;
    for (const auto& b : inst.betas)
      if (b < 0) ok = false;
    if (!std::is_sorted(inst.betas.begin(), inst.betas.end())) ok = false;
    if (ok) return inst;
  }
}

}  // namespace hks::testgen
