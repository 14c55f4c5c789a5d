#pragma once

// Shufflings of dent pairs and the three ratio identities they satisfy:
// total tilings, q-weighted tilings, and centrally symmetric tilings.

#include "lozenge/exact.hpp"
#include "lozenge/regions.hpp"

namespace lozenge {

/// A source region and the partner region obtained by flipping removed
/// triangles along the diagonal. d counts up-dents flipped down, u counts
/// down-dents flipped up; the diagonal moves up d-u units.
struct ShuffleInstance {
  DentedHexagon source;
  DentSet up_dents;    // X'
  DentSet down_dents;  // Y'
  int d;
  int u;
  DentedHexagon target;
};

/// Throws DomainError("not a shuffling") when union or intersection differ,
/// and propagates validate_hexagon errors for an invalid target.
ShuffleInstance make_shuffle(const DentedHexagon& h, const DentSet& new_up, const DentSet& new_down);

/// H(b)H(c) delta1(X')delta1(Y') / (H(b')H(c') delta1(X)delta1(Y)).
Rational ratio_unweighted(const ShuffleInstance& s);

/// alpha'(Z) - alpha(Z); the Z terms cancel because b+c = b'+c'.
long alpha_shift(const ShuffleInstance& s);

/// q^alpha [b]![c]!-type quotient of q-dent products.
QLaurentRatio ratio_weighted(const ShuffleInstance& s);

/// delta1(X') / delta1(X) for shuffles between centrally symmetric regions
/// that flip mirrored dents together. Throws DomainError otherwise.
Rational ratio_symmetric(const ShuffleInstance& s);

/// Whether the shuffle keeps both regions centrally symmetric.
bool is_symmetric_shuffle(const ShuffleInstance& s);

}  // namespace lozenge
