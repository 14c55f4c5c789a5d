#pragma once

// Brute-force ground truth. Nothing here consults the closed-form counts; the
// oracle sees only the unit-triangle geometry of a CellGrid.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "lozenge/exact.hpp"
#include "lozenge/partition.hpp"
#include "lozenge/regions.hpp"

namespace lozenge {

/// Visits every tiling once, depth-first on the first uncovered cell in
/// row-major order, trying left < vertical < right. Return false from the
/// visitor to stop early. Returns the number of tilings visited.
std::size_t enumerate_tilings(const CellGrid& g, const std::function<bool(const Tiling&)>& visit);

/// Tiling number `index` in enumeration order, if it exists.
std::optional<Tiling> nth_tiling(const CellGrid& g, std::size_t index);

/// Frontier-memoized count.
Integer count_tilings(const CellGrid& g);

/// q^(sum of rows of right-lozenges).
QPolynomial tiling_weight_q(const Tiling& t);
QPolynomial generating_function_q(const CellGrid& g);

/// Each right-lozenge whose bottom side lies on line r gets weights[r-1].
Rational weighted_count(const CellGrid& g, std::span<const Rational> row_weights);
QPolynomial weighted_count(const CellGrid& g, std::span<const QPolynomial> row_weights);

/// Restrict to tilings whose vertical lozenges across the labeled line sit
/// exactly at positions `z`.
Integer count_with_crossings(const CellGrid& g, const DentSet& z);
QPolynomial generating_function_with_crossings(const CellGrid& g, const DentSet& z);

/// s_lambda(x_1..x_n) as a sum over semistandard tableaux with entries
/// <= n, built by peeling off the horizontal strip of largest entries.
Rational schur_ssyt(const Partition& lambda, std::span<const Rational> points);
QPolynomial schur_ssyt(const Partition& lambda, std::span<const QPolynomial> points);

/// Cell-index permutation realizing the 180 degree rotation, or nullopt if
/// the present cells are not rotation invariant.
std::optional<std::vector<std::size_t>> rotation_map(const CellGrid& g);
bool is_centrally_symmetric(const CellGrid& g);

/// Image of a tiling under the rotation. Throws DomainError for asymmetric
/// regions.
Tiling rotate180(const CellGrid& g, const Tiling& t);

/// Tilings fixed by rotation. Throws DomainError for asymmetric regions.
Integer count_centrally_symmetric(const CellGrid& g);

}  // namespace lozenge
