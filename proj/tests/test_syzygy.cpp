#include <catch2/catch_amalgamated.hpp>

#include "hks/enumerate.hpp"
#include "hks/syzygy.hpp"

using namespace hks;

namespace {

std::vector<Monomial> mono(const std::vector<std::pair<int, int>>& ps) {
  std::vector<Monomial> out;
  for (auto [a, b] : ps) out.push_back(Monomial{a, b});
  return out;
}

HNData hn(const std::vector<std::pair<Int, Int>>& blocks) {
  return validate_hn(blocks);
}

const MonomialIdeal kSquares = minimalize(mono({{0, 2}, {2, 0}}));
const MonomialIdeal kDeg2Full = minimalize(mono({{0, 2}, {1, 1}, {2, 0}}));
const MonomialIdeal kMixed = minimalize(mono({{0, 3}, {2, 1}, {3, 0}}));
const MonomialIdeal kMaximal = minimalize(mono({{0, 1}, {1, 0}}));

}  // namespace

TEST_CASE("syzygy splitting worked cases") {
  CHECK(syzygy_splitting(kSquares).e == std::vector<std::int64_t>{4});
  CHECK(syzygy_splitting(kDeg2Full).e == std::vector<std::int64_t>{3, 3});
  CHECK(syzygy_splitting(kMixed).e == std::vector<std::int64_t>{4, 5});
}

TEST_CASE("syzygy twists balance the generator degrees") {
  for (const MonomialIdeal& ideal : enumerate_primary_ideals(6)) {
    const SyzygySplitting s = syzygy_splitting(ideal);
    CHECK(s.e.size() == ideal.gen_count() - 1);
    std::int64_t e_sum = 0, d_sum = 0;
    for (auto e : s.e) e_sum += e;
    for (auto d : ideal.degrees()) d_sum += d;
    CHECK(e_sum == d_sum);
    CHECK(std::is_sorted(s.e.begin(), s.e.end()));
  }
}

TEST_CASE("syzygy_hn worked cases") {
  CHECK(syzygy_hn(kSquares, 0) == hn({{1, -4}}));
  CHECK(syzygy_hn(kDeg2Full, 0) == hn({{2, -6}}));
  CHECK(syzygy_hn(kMixed, 0) == hn({{1, -4}, {1, -5}}));
  CHECK(syzygy_hn(kSquares, 2) == hn({{1, -2}}));
  CHECK(syzygy_hn(kDeg2Full, 2) == hn({{2, -2}}));
}

TEST_CASE("syzygy_hn equals the direct sum of its line-bundle blocks") {
  for (const MonomialIdeal& ideal : enumerate_primary_ideals(5)) {
    const SyzygySplitting s = syzygy_splitting(ideal);
    for (std::int64_t m : {-1, 0, 2}) {
      HNData sum = validate_hn({{1, Int(m) - s.e.front()}});
      for (std::size_t j = 1; j < s.e.size(); ++j)
        sum = direct_sum(sum, validate_hn({{1, Int(m) - s.e[j]}}));
      CHECK(syzygy_hn(ideal, m) == sum);
    }
  }
}

TEST_CASE("ehk_from_hn worked cases") {
  CHECK(ehk_from_hn(1, {2, 2}, hn({{1, -4}})) == 4);
  CHECK(ehk_from_hn(1, {2, 2, 2}, hn({{2, -6}})) == 3);
  CHECK(ehk_from_hn(1, {1, 1}, hn({{1, -2}})) == 1);

  CHECK_THROWS_AS(ehk_from_hn(1, {2, 2}, hn({{2, -4}})), ShapeMismatch);
  CHECK_THROWS_AS(ehk_from_hn(1, {2, 2}, hn({{1, -3}})), ShapeMismatch);
  CHECK_THROWS_AS(ehk_from_hn(2, {2, 2}, hn({{1, -4}})), ShapeMismatch);
  CHECK_THROWS_AS(ehk_from_hn(0, {2, 2}, hn({{1, -4}})), InvalidArgument);
  CHECK_THROWS_AS(ehk_from_hn(1, {2, 0}, hn({{1, -4}})), InvalidArgument);
}

TEST_CASE("ehk worked regression values") {
  CHECK(ehk(kSquares) == 4);
  CHECK(ehk(kDeg2Full) == 3);
  CHECK(ehk(kMixed) == 7);
  CHECK(ehk(kMaximal) == 1);
}

TEST_CASE("ehk_oracle worked values") {
  CHECK(ehk_oracle(kSquares) == 4);
  CHECK(ehk_oracle(kDeg2Full) == 3);
  CHECK(ehk_oracle(kMixed) == 7);
  CHECK(ehk_oracle(kMaximal) == 1);
}

TEST_CASE("formula and oracle agree on the degree-6 family") {
  for (const MonomialIdeal& ideal : enumerate_primary_ideals(6)) {
    const Rational viaSlopes = ehk(ideal);
    CHECK(viaSlopes == ehk_oracle(ideal));
    CHECK(viaSlopes > 0);
  }
}

TEST_CASE("ehk is monotone under containment") {
  const auto family = enumerate_primary_ideals(4);
  auto contains = [](const MonomialIdeal& small, const MonomialIdeal& big) {
    for (const Monomial& g : small.gens())
      if (!membership_direct(big, g)) return false;
    return true;
  };
  std::int64_t strict = 0;
  for (const MonomialIdeal& inner : family) {
    for (const MonomialIdeal& outer : family) {
      if (!contains(inner, outer)) continue;
      CHECK(ehk(inner) >= ehk(outer));
      if (!(inner == outer)) {
        CHECK(ehk(inner) > ehk(outer));
        ++strict;
      }
    }
  }
  CHECK(strict > 0);
}

TEST_CASE("twist bookkeeping of the syzygy bundle") {
  for (const MonomialIdeal& ideal : enumerate_primary_ideals(5)) {
    const HNData at_zero = syzygy_hn(ideal, 0);
    for (std::int64_t m : {-3, -1, 0, 1, 2, 7}) {
      CHECK(syzygy_hn(ideal, m) == twist(at_zero, m));
      CHECK(mu_hk(syzygy_hn(ideal, m)) == mu_hk(twist(at_zero, m)));
    }
  }
}

TEST_CASE("membership worked cases") {
  CHECK(!membership_via_hk(kSquares, Monomial{1, 1}));
  CHECK(ehk(minimalize(mono({{0, 2}, {1, 1}, {2, 0}}))) == 3);
  CHECK(membership_via_hk(kSquares, Monomial{2, 1}));
  CHECK(!membership_via_hk(minimalize(mono({{0, 3}, {3, 0}})), Monomial{1, 2}));
  CHECK(!membership_via_hk(kSquares, Monomial{0, 0}));
}

TEST_CASE("membership routes agree on an exhaustive small family") {
  for (const MonomialIdeal& ideal : enumerate_primary_ideals(4)) {
    for (const Monomial& f : monomials_up_to(6)) {
      CHECK(membership_via_hk(ideal, f) == membership_direct(ideal, f));
    }
  }
}

TEST_CASE("shifted interleaving where the filtrations share no subsheaf") {
  // distinct leading blocks rule out a common filtration subsheaf, so the
  // shifted inequality is forced
  std::int64_t certified = 0;
  for (const MonomialIdeal& ideal : enumerate_primary_ideals(4)) {
    for (const Monomial& f : monomials_up_to(6)) {
      if (f.a == 0 && f.b == 0) continue;
      if (membership_direct(ideal, f)) continue;
      std::vector<Monomial> gens = ideal.gens();
      gens.push_back(f);
      const MonomialIdeal joined = minimalize(std::move(gens));
      if (joined.gen_count() != ideal.gen_count() + 1) continue;
      const HNData before = syzygy_hn(ideal, f.degree());
      const HNData after = syzygy_hn(joined, f.degree());
      if (before.blocks.front() == after.blocks.front()) continue;
      ++certified;
      CHECK(interleave_check(expand_slopes(before), expand_slopes(after),
                             /*shifted=*/true));
    }
  }
  CHECK(certified > 0);
}

TEST_CASE("bridge check worked cases") {
  CHECK(hk_slope_bridge_check(kSquares, Monomial{1, 1}));
  CHECK(hk_slope_bridge_check(kSquares, Monomial{2, 1}));
  CHECK(hk_slope_bridge_check(minimalize(mono({{0, 3}, {3, 0}})),
                              Monomial{1, 1}));
  CHECK_THROWS_AS(hk_slope_bridge_check(kSquares, Monomial{0, 0}),
                  InvalidArgument);
}

TEST_CASE("mu_hk values behind the first bridge case") {
  CHECK(mu_hk(syzygy_hn(kSquares, 2)) == 4);
  CHECK(mu_hk(syzygy_hn(kDeg2Full, 2)) == 2);
}
