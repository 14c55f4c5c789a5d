#include <doctest.h>

#include "lozenge/formulas.hpp"
#include "lozenge/oracle.hpp"
#include "support.hpp"

using namespace lozenge;
using namespace lozenge::test;

TEST_CASE("Vandermonde-type products") {
  CHECK(delta1(DentSet{}) == 1);
  CHECK(delta1(DentSet({1, 4, 5, 9, 12})) == Integer(3) * 4 * 8 * 11 * 1 * 5 * 8 * 4 * 7 * 3);
  CHECK(delta2(DentSet({1, 3}), DentSet({2})) == 1);
  CHECK_THROWS_AS(delta2(DentSet({1, 3}), DentSet({3})), DomainError);
  for (int n = 0; n < 10; ++n) {
    CHECK(hyperfactorial(n) == hyperfactorial_ref(n));
    CHECK(delta1(DentSet::range(n)) == hyperfactorial_ref(n));
    CHECK(evaluate_at_one(delta1_q(DentSet::range(n))) == hyperfactorial_ref(n));
  }
}

TEST_CASE("partitions read off dent positions") {
  CHECK(lambda_of(DentSet({1, 4, 5, 9, 12})).parts() == std::vector<int>{7, 5, 2, 2, 0});
  CHECK(lambda_of(DentSet({1, 2, 3})).size() == 0);
}

TEST_CASE("trapezoid counts on named instances") {
  CHECK(clp_count(Trapezoid::make(8, 5, {1, 4, 5, 9, 12})) == 12320);
  CHECK(clp_count(Trapezoid::make(1, 1, {1})) == 1);
  CHECK(clp_count(Trapezoid::make(0, 0, {})) == 1);
}

TEST_CASE("principal specialization agrees with the bialternant formula") {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const int k = uniform(rng, 1, 9);
    std::vector<int> v;
    for (int p = 1; p <= k; ++p)
      if (rng() & 1u) v.push_back(p);
    const DentSet s(v);
    const Rational q = distinct_rationals(rng, 1)[0] + 1;  // q != 1 keeps the points distinct
    std::vector<Rational> points;
    for (std::size_t j = 0; j < s.size(); ++j) points.push_back(power(q, static_cast<int>(j)));
    CHECK(evaluate(schur_principal(s), q) == schur_bialternant(lambda_of(s), points));
  }
}

TEST_CASE("MacMahon's box formula for undented hexagons") {
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) CHECK(hex_count(validate_hexagon(a, b, b, {}, {})) == macmahon(a, b, b));
}

TEST_CASE("named hexagon counts") {
  CHECK(hex_count(validate_hexagon(1, 1, 1, {}, {})) == 2);
  CHECK(hex_count_q(validate_hexagon(1, 1, 1, {}, {})) == QPolynomial(std::vector<Integer>{0, 1, 1}));
  CHECK(sym_count(validate_hexagon(1, 1, 1, {}, {})) == 0);
  CHECK(sym_count(validate_hexagon(2, 1, 1, {}, {})) == 1);
  CHECK(hex_count(validate_hexagon(6, 5, 7, {3, 7, 9}, {2, 3, 5, 8, 11})) == 251390790);
  CHECK(sym_count(validate_hexagon(5, 9, 9, {2, 4, 6, 8, 11}, {4, 7, 9, 11, 13})) == 38531808);
  CHECK_THROWS_AS(sym_count(validate_hexagon(3, 8, 4, {2, 3, 5, 8, 9, 11}, {3, 7})), DomainError);
}

TEST_CASE("frozen regions have a single monomial generating function") {
  // All b up-dents on the diagonal leave no freedom.
  const DentedHexagon h = validate_hexagon(0, 3, 0, {1, 2, 3}, {});
  CHECK(hex_count(h) == 1);
  const QPolynomial p = hex_count_q(h);
  CHECK(p.degree() == static_cast<long>(p.valuation()));
}

TEST_CASE("each crossing class matches its oracle restriction") {
  for_each_hexagon(4, 4, [](const DentedHexagon& h) {
    const CellGrid g = build_cells(h);
    for (const DentSet& z : crossing_sets(h)) {
      const Integer expect = delta1(set_union(h.up_dents(), z)) * delta1(set_union(h.down_dents(), z)) /
                             (hyperfactorial(h.b()) * hyperfactorial(h.c()));
      CHECK(count_with_crossings(g, z) == expect);
    }
  });
}

TEST_CASE("q-count of a trapezoid is the shifted principal specialization") {
  for_each_trapezoid(6, [](const Trapezoid& t) {
    CHECK(clp_count_q(t) == generating_function_q(build_cells(t)));
    CHECK(evaluate_at_one(clp_count_q(t)) == clp_count(t));
  });
}

TEST_CASE("symmetric crossing sets are closed under reflection") {
  for_each_hexagon(6, 6, [](const DentedHexagon& h) {
    if (!is_centrally_symmetric(h)) return;
    for (const DentSet& z : symmetric_crossing_sets(h)) {
      CHECK(is_k_symmetric(z, h.diagonal()));
      CHECK(static_cast<int>(z.size()) == h.crossings());
      CHECK(disjoint(z, set_union(h.up_dents(), h.down_dents())));
    }
  });
}
