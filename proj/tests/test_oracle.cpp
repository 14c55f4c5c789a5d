#include <doctest.h>

#include <set>

#include "lozenge/formulas.hpp"
#include "lozenge/oracle.hpp"
#include "support.hpp"

using namespace lozenge;
using namespace lozenge::test;

TEST_CASE("enumeration and frontier counting agree on small regions") {
  std::size_t checked = 0;
  for_each_hexagon(4, 5, [&](const DentedHexagon& h) {
    const CellGrid g = build_cells(h);
    if (g.present_count() > 40) return;
    std::set<std::vector<Lozenge>> seen;
    const std::size_t n = enumerate_tilings(g, [&](const Tiling& t) {
      CHECK(is_tiling_of(g, t));
      seen.insert(t.canonical().lozenges);
      return true;
    });
    CHECK(seen.size() == n);
    CHECK(count_tilings(g) == n);
    ++checked;
  });
  CHECK(checked > 100);
}

TEST_CASE("undented hexagons match MacMahon") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) CHECK(count_tilings(build_cells(validate_hexagon(a, b, b, {}, {}))) == macmahon(a, b, b));
}

TEST_CASE("named oracle counts") {
  CHECK(count_tilings(build_cells(Trapezoid::make(8, 5, {1, 4, 5, 9, 12}))) == 12320);
  CHECK(count_tilings(build_cells(validate_hexagon(1, 1, 1, {}, {}))) == 2);
  CHECK(count_tilings(build_cells(Trapezoid::make(0, 0, {}))) == 1);
}

TEST_CASE("nth tiling follows enumeration order") {
  const CellGrid g = build_cells(validate_hexagon(2, 2, 2, {}, {}));
  std::vector<Tiling> all;
  enumerate_tilings(g, [&](const Tiling& t) {
    all.push_back(t);
    return true;
  });
  REQUIRE(all.size() == 20);
  for (std::size_t i = 0; i < all.size(); ++i) CHECK(nth_tiling(g, i) == all[i]);
  CHECK_FALSE(nth_tiling(g, all.size()).has_value());
  const auto first = nth_tiling(build_cells(validate_hexagon(1, 1, 1, {}, {})), 0);
  REQUIRE(first.has_value());
  CHECK(first->lozenges.size() == 3);
}

TEST_CASE("generating function sums tiling weights") {
  for_each_hexagon(3, 4, [](const DentedHexagon& h) {
    const CellGrid g = build_cells(h);
    QPolynomial total;
    enumerate_tilings(g, [&](const Tiling& t) {
      total += tiling_weight_q(t);
      return true;
    });
    CHECK(generating_function_q(g) == total);
    CHECK(evaluate_at_one(total) == count_tilings(g));
  });
}

TEST_CASE("row-weighted counts specialize correctly") {
  Rng rng(19);
  for_each_trapezoid(5, [&](const Trapezoid& t) {
    const CellGrid g = build_cells(t);
    const std::vector<Rational> ones(static_cast<std::size_t>(g.height()), Rational(1));
    CHECK(weighted_count(g, ones) == Rational(count_tilings(g)));
    std::vector<QPolynomial> qs;
    for (int r = 1; r <= g.height(); ++r) qs.push_back(QPolynomial::q_power(static_cast<std::size_t>(r)));
    CHECK(weighted_count(g, qs) == generating_function_q(g));
    const std::vector<Rational> x = distinct_rationals(rng, static_cast<std::size_t>(t.n()));
    CHECK(weighted_count(g, x) == schur_bialternant(lambda_of(t.dents()), x));
  });
}

TEST_CASE("tableau Schur functions agree with the bialternant formula") {
  Rng rng(23);
  for (int i = 0; i < 150; ++i) {
    const int n = uniform(rng, 1, 4);
    std::vector<int> parts;
    int prev = uniform(rng, 0, 5);
    for (int j = 0; j < n; ++j) {
      parts.push_back(prev);
      prev = uniform(rng, 0, prev);
    }
    const Partition lambda(parts);
    const std::vector<Rational> x = distinct_rationals(rng, static_cast<std::size_t>(n));
    CHECK(schur_ssyt(lambda, x) == schur_bialternant(lambda, x));
  }
  const std::vector<Rational> two(2, Rational(1));
  CHECK(schur_ssyt(Partition({1, 1, 1}), two) == 0);
}

TEST_CASE("rotation is an involution on tilings of symmetric regions") {
  for_each_hexagon(4, 6, [](const DentedHexagon& h) {
    if (!is_centrally_symmetric(h)) return;
    const CellGrid g = build_cells(h);
    if (g.present_count() > 40) return;
    std::size_t fixed = 0;
    enumerate_tilings(g, [&](const Tiling& t) {
      const Tiling r = rotate180(g, t);
      CHECK(is_tiling_of(g, r));
      CHECK(rotate180(g, r).canonical() == t.canonical());
      if (r.canonical() == t.canonical()) ++fixed;
      return true;
    });
    CHECK(count_centrally_symmetric(g) == fixed);
  });
  const CellGrid lopsided = build_cells(validate_hexagon(3, 8, 4, {2, 3, 5, 8, 9, 11}, {3, 7}));
  CHECK_FALSE(rotation_map(lopsided).has_value());
  CHECK_THROWS_AS(count_centrally_symmetric(lopsided), DomainError);
}

TEST_CASE("crossing-restricted counts partition the tilings") {
  for_each_hexagon(4, 4, [](const DentedHexagon& h) {
    const CellGrid g = build_cells(h);
    Integer total = 0;
    for (const DentSet& z : crossing_sets(h)) total += count_with_crossings(g, z);
    CHECK(total == count_tilings(g));
  });
}
