#include <doctest.h>

#include "lozenge/formulas.hpp"
#include "lozenge/oracle.hpp"
#include "lozenge/shuffle.hpp"
#include "support.hpp"

using namespace lozenge;
using namespace lozenge::test;

namespace {

DentedHexagon plain_source() { return validate_hexagon(3, 8, 4, {2, 3, 5, 8, 9, 11}, {3, 7}); }
DentedHexagon symmetric_source() { return validate_hexagon(5, 9, 9, {2, 4, 6, 8, 11}, {4, 7, 9, 11, 13}); }

}  // namespace

TEST_CASE("shuffle bookkeeping") {
  const ShuffleInstance s = make_shuffle(plain_source(), {3, 7, 9}, {2, 3, 5, 8, 11});
  CHECK(s.d == 4);
  CHECK(s.u == 1);
  CHECK(s.target == validate_hexagon(6, 5, 7, {3, 7, 9}, {2, 3, 5, 8, 11}));
}

TEST_CASE("non-shufflings are rejected") {
  auto clause = [](const DentSet& x, const DentSet& y) {
    try {
      make_shuffle(plain_source(), x, y);
    } catch (const DomainError& e) {
      return e.clause();
    }
    return std::string();
  };
  CHECK(clause({3, 7, 9}, {2, 5, 8, 11}) == "not a shuffling");     // intersection lost
  CHECK(clause({1, 3, 7, 9}, {2, 3, 5, 8, 11}) == "not a shuffling");  // union changed
  CHECK(clause({2, 3, 5, 7, 8, 9, 11}, {3}).empty());
}

TEST_CASE("unweighted ratio on the named pair") {
  const ShuffleInstance s = make_shuffle(plain_source(), {3, 7, 9}, {2, 3, 5, 8, 11});
  CHECK(ratio_unweighted(s) == Rational(15, 2));
  const Integer src = count_tilings(build_cells(s.source));
  const Integer dst = count_tilings(build_cells(s.target));
  CHECK(src == 33518772);
  CHECK(dst == 251390790);
  CHECK(dst * 2 == src * 15);
}

TEST_CASE("weighted ratio on the named pair") {
  const ShuffleInstance s = make_shuffle(plain_source(), {3, 7, 9}, {2, 3, 5, 8, 11});
  const QLaurentRatio r = ratio_weighted(s);
  CHECK(alpha_shift(s) == -52);
  CHECK(r.evaluate(Rational(1)) == Rational(15, 2));
  CHECK(r.satisfied_by(hex_count_q(s.target), hex_count_q(s.source)));
  CHECK(hex_count_q(s.source) == generating_function_q(build_cells(s.source)));
}

TEST_CASE("identity shuffles have ratio one") {
  const DentedHexagon h = plain_source();
  const ShuffleInstance s = make_shuffle(h, h.up_dents(), h.down_dents());
  CHECK(s.target == h);
  CHECK(ratio_unweighted(s) == 1);
  CHECK(alpha_shift(s) == 0);
  CHECK(ratio_weighted(s) == QLaurentRatio());
  const DentedHexagon sym = symmetric_source();
  CHECK(ratio_symmetric(make_shuffle(sym, sym.up_dents(), sym.down_dents())) == 1);
}

TEST_CASE("symmetric ratio and the square-root relation on the named pair") {
  const ShuffleInstance s = make_shuffle(symmetric_source(), {4, 8, 9, 11, 13}, {2, 4, 6, 7, 11});
  REQUIRE(is_symmetric_shuffle(s));
  const Rational r = ratio_symmetric(s);
  CHECK(r == Rational(delta1(DentSet({4, 8, 9, 11, 13})), delta1(DentSet({2, 4, 6, 8, 11}))));
  CHECK(r == Rational(5, 12));
  CHECK(r * r == ratio_unweighted(s));
  const Integer src = count_centrally_symmetric(build_cells(s.source));
  const Integer dst = count_centrally_symmetric(build_cells(s.target));
  CHECK(src == 38531808);
  CHECK(dst == 16054920);
  CHECK(dst * 12 == src * 5);
}

TEST_CASE("symmetric ratio refuses asymmetric shuffles") {
  const ShuffleInstance plain = make_shuffle(plain_source(), {3, 7, 9}, {2, 3, 5, 8, 11});
  CHECK_FALSE(is_symmetric_shuffle(plain));
  CHECK_THROWS_AS(ratio_symmetric(plain), DomainError);
  // Flipping the up-dent at 2 without its mirror at 13 breaks symmetry.
  const ShuffleInstance half = make_shuffle(symmetric_source(), {4, 6, 8, 11}, {2, 4, 7, 9, 11, 13});
  CHECK_FALSE(is_symmetric_shuffle(half));
  CHECK_THROWS_AS(ratio_symmetric(half), DomainError);
}

TEST_CASE("random shuffles satisfy all identities against the oracle") {
  Rng rng(29);
  for (int i = 0; i < 150; ++i) {
    const ShuffleInstance s = random_shuffle(rng, 5, 5);
    const Integer src = count_tilings(build_cells(s.source));
    const Integer dst = count_tilings(build_cells(s.target));
    const Rational r = ratio_unweighted(s);
    CHECK(dst * boost::multiprecision::denominator(r) == src * boost::multiprecision::numerator(r));
    CHECK(ratio_weighted(s).satisfied_by(generating_function_q(build_cells(s.target)),
                                         generating_function_q(build_cells(s.source))));
  }
  for (int i = 0; i < 100; ++i) {
    const ShuffleInstance s = random_symmetric_shuffle(rng, 7);
    CHECK(is_symmetric_shuffle(s));
    const Rational r = ratio_symmetric(s);
    const Integer src = count_centrally_symmetric(build_cells(s.source));
    const Integer dst = count_centrally_symmetric(build_cells(s.target));
    CHECK(dst * boost::multiprecision::denominator(r) == src * boost::multiprecision::numerator(r));
    CHECK(r * r == ratio_unweighted(s));
  }
}
