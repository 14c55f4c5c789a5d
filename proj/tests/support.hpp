#pragma once

// Test-side reference computations that share no code with the library's
// formulas, plus small helpers for building instances.

#include <algorithm>
#include <string>
#include <vector>

#include "lozenge/exact.hpp"
#include "lozenge/io.hpp"
#include "lozenge/oracle.hpp"
#include "lozenge/partition.hpp"
#include "lozenge/regions.hpp"
#include "lozenge/verify.hpp"

namespace lozenge::test {

inline Integer factorial(int n) {
  Integer out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

/// prod_{i<n} i!, computed from factorials.
inline Integer hyperfactorial_ref(int n) {
  Integer out = 1;
  for (int i = 0; i < n; ++i) out *= factorial(i);
  return out;
}

/// Boxed plane partitions in an a x b x c box; equals the tiling count of a
/// hexagon with sides a, b, c.
inline Integer macmahon(int a, int b, int c) {
  const Integer num = hyperfactorial_ref(a) * hyperfactorial_ref(b) * hyperfactorial_ref(c) *
                      hyperfactorial_ref(a + b + c);
  const Integer den = hyperfactorial_ref(a + b) * hyperfactorial_ref(b + c) * hyperfactorial_ref(c + a);
  return num / den;
}

/// Determinant by fraction-exact Gaussian elimination.
inline Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return det;
}

inline Rational power(const Rational& x, int e) {
  Rational out = 1;
  for (int i = 0; i < e; ++i) out *= x;
  return out;
}

/// Bialternant formula det(x_i^(lambda_j + n - j)) / det(x_i^(n - j)) at
/// distinct points.
inline Rational schur_bialternant(const Partition& lambda, const std::vector<Rational>& x) {
  const int n = static_cast<int>(x.size());
  std::vector<std::vector<Rational>> num(x.size(), std::vector<Rational>(x.size()));
  std::vector<std::vector<Rational>> den = num;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      num[i][j] = power(x[i], lambda[static_cast<std::size_t>(j)] + n - 1 - j);
      den[i][j] = power(x[i], n - 1 - j);
    }
  return determinant(num) / determinant(den);
}

/// Counts rotation-invariant tilings by enumerating every tiling.
inline Integer symmetric_by_enumeration(const CellGrid& g) {
  Integer n = 0;
  enumerate_tilings(g, [&](const Tiling& t) {
    if (rotate180(g, t).canonical() == t.canonical()) ++n;
    return true;
  });
  return n;
}

/// A positive rational with small numerator and denominator.
inline Rational random_rational(Rng& rng) { return Rational(uniform(rng, 1, 9)) / uniform(rng, 1, 7); }

/// n pairwise distinct positive rationals.
inline std::vector<Rational> distinct_rationals(Rng& rng, std::size_t n) {
  std::vector<Rational> out;
  while (out.size() < n) {
    const Rational r = random_rational(rng);
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
  return out;
}

}  // namespace lozenge::test
