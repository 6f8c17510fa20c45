#include <catch2/catch_amalgamated.hpp>

#include "hks/enumerate.hpp"
#include "hks/monomial.hpp"

using namespace hks;

namespace {

std::vector<Monomial> mono(const std::vector<std::pair<int, int>>& ps) {
  std::vector<Monomial> out;
  for (auto [a, b] : ps) out.push_back(Monomial{a, b});
  return out;
}

// Independent colength oracle: walk the finite grid under the pure powers
// and count the monomials no generator divides.
Int brute_force_colength(const MonomialIdeal& ideal) {
  const std::int64_t a_max = ideal.gens().back().a;
  const std::int64_t b_max = ideal.gens().front().b;
  Int count = 0;
  for (std::int64_t a = 0; a < a_max; ++a)
    for (std::int64_t b = 0; b < b_max; ++b)
      if (!membership_direct(ideal, Monomial{a, b})) ++count;
  return count;
}

}  // namespace

TEST_CASE("minimalize worked cases") {
  const MonomialIdeal dropped = minimalize(mono({{0, 2}, {2, 0}, {2, 1}}));
  CHECK(dropped.gens() == mono({{0, 2}, {2, 0}}));

  const MonomialIdeal kept = minimalize(mono({{0, 2}, {1, 1}, {2, 0}}));
  CHECK(kept.gens() == mono({{0, 2}, {1, 1}, {2, 0}}));

  CHECK_THROWS_AS(minimalize(mono({{1, 1}})), NotPrimary);
  CHECK_THROWS_AS(minimalize(mono({{0, 2}, {1, 1}})), NotPrimary);
  CHECK_THROWS_AS(minimalize(mono({{1, 1}, {2, 0}})), NotPrimary);
  CHECK_THROWS_AS(minimalize({}), NotPrimary);
  CHECK_THROWS_AS(minimalize(mono({{0, 0}})), NotPrimary);
  CHECK_THROWS_AS(minimalize(mono({{0, 0}, {0, 2}, {2, 0}})), NotPrimary);
  CHECK_THROWS_AS(minimalize({Monomial{-1, 2}}), InvalidArgument);

  // order and duplicates do not matter
  CHECK(minimalize(mono({{2, 0}, {0, 2}, {2, 0}, {1, 1}})) ==
        minimalize(mono({{0, 2}, {1, 1}, {2, 0}})));
}

TEST_CASE("colength worked cases") {
  CHECK(colength(minimalize(mono({{0, 2}, {2, 0}}))) == 4);
  CHECK(colength(minimalize(mono({{0, 2}, {1, 1}, {2, 0}}))) == 3);
  CHECK(colength(minimalize(mono({{0, 3}, {2, 1}, {3, 0}}))) == 7);
  CHECK(colength(minimalize(mono({{0, 1}, {1, 0}}))) == 1);
}

TEST_CASE("colength equals brute-force staircase count on the full family") {
  for (const MonomialIdeal& ideal : enumerate_primary_ideals(6))
    CHECK(colength(ideal) == brute_force_colength(ideal));
}

TEST_CASE("bracket_power worked cases") {
  const MonomialIdeal base = minimalize(mono({{0, 2}, {2, 0}}));
  CHECK(bracket_power(base, 3).gens() == mono({{0, 6}, {6, 0}}));
  CHECK(bracket_power(base, 1) == base);

  const MonomialIdeal three = minimalize(mono({{0, 2}, {1, 1}, {2, 0}}));
  CHECK(colength(bracket_power(three, 2)) == 12);

  CHECK_THROWS_AS(bracket_power(base, 0), InvalidArgument);
}

TEST_CASE("bracket_power colength scales by q^2") {
  for (const MonomialIdeal& ideal : enumerate_primary_ideals(5)) {
    const Int base = colength(ideal);
    for (std::int64_t q : {2, 3, 5}) {
      CHECK(colength(bracket_power(ideal, q)) == Int(q) * q * base);
    }
  }
}

TEST_CASE("membership_direct worked cases") {
  const MonomialIdeal ideal = minimalize(mono({{0, 2}, {2, 0}}));
  CHECK(!membership_direct(ideal, Monomial{1, 1}));
  CHECK(membership_direct(ideal, Monomial{2, 1}));
  CHECK(membership_direct(ideal, Monomial{0, 2}));
  CHECK(!membership_direct(ideal, Monomial{0, 0}));
}
