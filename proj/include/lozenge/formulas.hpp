#pragma once

// Closed-form exact counts: Vandermonde-type dent products, hyperfactorials,
// the Cohn-Larsen-Propp trapezoid count, the crossing-set sum for dented
// hexagons, their q-analogues and the centrally symmetric count.

#include <functional>
#include <vector>

#include "lozenge/exact.hpp"
#include "lozenge/partition.hpp"
#include "lozenge/regions.hpp"

namespace lozenge {

/// prod_{s<s'} (s' - s).
Integer delta1(const DentSet& s);
/// prod_{s in S, t in T} |t - s|; S and T must be disjoint.
Integer delta2(const DentSet& s, const DentSet& t);
/// H(n) = 0! 1! ... (n-1)!.
Integer hyperfactorial(int n);

/// Number of tilings of T_{m,n}(S): delta1(S) / H(n).
Integer clp_count(const Trapezoid& t);

/// (s_n - n, ..., s_2 - 2, s_1 - 1).
Partition lambda_of(const DentSet& s);

/// prod_{s<s'} ([s']_q - [s]_q).
QPolynomial delta1_q(const DentSet& s);
/// prod over pairs of ([larger]_q - [smaller]_q); S and T disjoint.
QPolynomial delta2_q(const DentSet& s, const DentSet& t);

/// s_{lambda(S)}(1, q, ..., q^{|S|-1}) as delta1_q(S) / delta1_q([|S|]).
QPolynomial schur_principal(const DentSet& s);

/// Calls fn(Z) for every k-subset Z of `from`, lexicographically.
void for_each_subset(const DentSet& from, std::size_t k, const std::function<void(const DentSet&)>& fn);

/// Admissible crossing sets of a hexagon, lexicographic.
std::vector<DentSet> crossing_sets(const DentedHexagon& h);
/// Crossing sets that are symmetric under p -> a+b+1-p.
std::vector<DentSet> symmetric_crossing_sets(const DentedHexagon& h);

/// Tiling generating function of T_{m,n}(S): rows weighted q, q^2, ..., q^n,
/// i.e. q^|lambda(S)| times the principal specialization.
QPolynomial clp_count_q(const Trapezoid& t);

/// sum_Z delta1(X u Z) delta1(Y u Z) / (H(b) H(c)).
Integer hex_count(const DentedHexagon& h);

/// Exponent of q carried by the class of tilings crossing the diagonal at Z;
/// may be negative, in which case the Schur factors supply the missing powers.
long alpha_of_Z(const DentedHexagon& h, const DentSet& z);

using AlphaFn = std::function<long(const DentedHexagon&, const DentSet&)>;

/// sum_Z q^alpha(Z) schur_principal(X u Z) schur_principal(Y u Z).
/// The exponent rule can be replaced for fault-injection tests.
QPolynomial hex_count_q(const DentedHexagon& h);
QPolynomial hex_count_q(const DentedHexagon& h, const AlphaFn& alpha);

/// Centrally symmetric tilings: sum over symmetric Z of delta1(X u Z) / H(b).
/// Throws DomainError for regions that are not centrally symmetric.
Integer sym_count(const DentedHexagon& h);

}  // namespace lozenge
