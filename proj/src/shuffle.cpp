#include "lozenge/shuffle.hpp"

#include "lozenge/formulas.hpp"

namespace lozenge {

ShuffleInstance make_shuffle(const DentedHexagon& h, const DentSet& new_up, const DentSet& new_down) {
  const DentSet& x = h.up_dents();
  const DentSet& y = h.down_dents();
  if (set_union(x, y) != set_union(new_up, new_down))
    throw DomainError("not a shuffling", "union of dents changed: " + to_string(set_union(x, y)) + " vs " +
                                             to_string(set_union(new_up, new_down)));
  if (set_intersection(x, y) != set_intersection(new_up, new_down))
    throw DomainError("not a shuffling", "vertical-lozenge dents must be preserved: " +
                                             to_string(set_intersection(x, y)) + " vs " +
                                             to_string(set_intersection(new_up, new_down)));
  const int d = static_cast<int>(set_difference(x, new_up).size());
  const int u = static_cast<int>(set_difference(y, new_down).size());
  const int move = d - u;
  DentedHexagon target = validate_hexagon(h.a() + move, h.b() - move, h.c() + move, new_up, new_down);
  return {h, new_up, new_down, d, u, std::move(target)};
}

Rational ratio_unweighted(const ShuffleInstance& s) {
  const DentedHexagon& h = s.source;
  const DentedHexagon& t = s.target;
  const Integer num = hyperfactorial(h.b()) * hyperfactorial(h.c()) * delta1(t.up_dents()) * delta1(t.down_dents());
  const Integer den = hyperfactorial(t.b()) * hyperfactorial(t.c()) * delta1(h.up_dents()) * delta1(h.down_dents());
  return Rational(num, den);
}

namespace {

// The Z-independent part of alpha(Z).
long alpha_base(const DentedHexagon& h) {
  const long a = h.a(), b = h.b(), c = h.c();
  return h.up_dents().sum() - (b + c) * h.down_dents().sum() - b * (b + 1) / 2 + (a + b + 1) * (b + 1) * c -
         (b + 1) * c * (c + 1) / 2 + (a + b + 1) * c * (c - 1) / 2;
}

}  // namespace

long alpha_shift(const ShuffleInstance& s) { return alpha_base(s.target) - alpha_base(s.source); }

QLaurentRatio ratio_weighted(const ShuffleInstance& s) {
  const DentedHexagon& h = s.source;
  const DentedHexagon& t = s.target;
  QPolynomial num = delta1_q(DentSet::range(h.b())) * delta1_q(DentSet::range(h.c())) * delta1_q(t.up_dents()) *
                    delta1_q(t.down_dents());
  QPolynomial den = delta1_q(DentSet::range(t.b())) * delta1_q(DentSet::range(t.c())) * delta1_q(h.up_dents()) *
                    delta1_q(h.down_dents());
  return QLaurentRatio(alpha_shift(s), std::move(num), std::move(den));
}

bool is_symmetric_shuffle(const ShuffleInstance& s) {
  // Mirrored flips keep Y' = X' reflected; with b = c this also forces d = u.
  return is_centrally_symmetric(s.source) && is_centrally_symmetric(s.target);
}

Rational ratio_symmetric(const ShuffleInstance& s) {
  if (!is_centrally_symmetric(s.source))
    throw DomainError("central symmetry", "source " + describe(s.source) + " is not centrally symmetric");
  if (!is_centrally_symmetric(s.target))
    throw DomainError("symmetric flips", "flips are not mirrored: target " + describe(s.target) +
                                             " is not centrally symmetric");
  return Rational(delta1(s.target.up_dents()), delta1(s.source.up_dents()));
}

}  // namespace lozenge
