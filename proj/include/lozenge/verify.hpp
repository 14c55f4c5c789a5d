#pragma once

// Property sweeps comparing the closed forms against the oracle, plus the
// instance generators they (and the test suites) draw from.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lozenge/formulas.hpp"
#include "lozenge/io.hpp"
#include "lozenge/shuffle.hpp"

namespace lozenge {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi]; plain modulo so sequences are identical
/// across standard libraries.
int uniform(Rng& rng, int lo, int hi);

/// Every valid V_{a,b,c}(X,Y) with a+b <= max_diagonal and b+c <= max_height,
/// ordered by (a+b+c, a, b, c, X, Y).
void for_each_hexagon(int max_diagonal, int max_height, const std::function<void(const DentedHexagon&)>& fn);
/// Every T_{m,n}(S) with m+n <= max_width, ordered by (m+n, n, S).
void for_each_trapezoid(int max_width, const std::function<void(const Trapezoid&)>& fn);

DentedHexagon random_hexagon(Rng& rng, int max_diagonal, int max_height);
/// A random shuffle whose target is valid; flips each unpaired dent with
/// probability 1/2.
ShuffleInstance random_shuffle(Rng& rng, int max_diagonal, int max_height);
/// Source V_{a,b,b}(X, X reflected) with a+b <= max_diagonal, flipping
/// mirrored dent pairs together.
ShuffleInstance random_symmetric_shuffle(Rng& rng, int max_diagonal);

struct VerifyOptions {
  int max_size = 4;
  std::uint64_t seed = 1;
  int cases = 100;
  /// Exponent rule used by the q-weighted closed form; tests swap in a
  /// faulty one to check that the harness notices.
  AlphaFn alpha = alpha_of_Z;
};

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::optional<Json> counterexample;
  std::string detail;
};

struct VerifyReport {
  std::vector<SuiteResult> suites;

  bool passed() const;
  Json to_json() const;
};

VerifyReport run_verification(const VerifyOptions& options);

}  // namespace lozenge
