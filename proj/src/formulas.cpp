#include "lozenge/formulas.hpp"

#include <algorithm>
#include <cstdlib>

namespace lozenge {

namespace {

void require_disjoint(const DentSet& s, const DentSet& t) {
  if (!disjoint(s, t)) throw DomainError("disjoint sets", to_string(s) + " and " + to_string(t) + " overlap");
}

Integer divide_exact(const Integer& num, const Integer& den, const char* what) {
  Integer q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw InexactDivision(std::string(what) + ": quotient is not an integer");
  return q;
}

// [t]_q - [s]_q = q^s [t-s]_q for s < t.
QPolynomial times_q_gap(const QPolynomial& p, int s, int t) { return mul_q_int(p, t - s).shifted(static_cast<std::size_t>(s)); }

}  // namespace

Integer delta1(const DentSet& s) {
  Integer out = 1;
  const auto& p = s.positions();
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) out *= p[j] - p[i];
  return out;
}

Integer delta2(const DentSet& s, const DentSet& t) {
  require_disjoint(s, t);
  Integer out = 1;
  for (int x : s)
    for (int y : t) out *= std::abs(y - x);
  return out;
}

Integer hyperfactorial(int n) {
  if (n < 0) throw DomainError("hyperfactorial", "n must be >= 0");
  Integer out = 1;
  Integer fact = 1;
  for (int i = 1; i < n; ++i) {
    fact *= i;
    out *= fact;
  }
  return out;
}

Integer clp_count(const Trapezoid& t) { return divide_exact(delta1(t.dents()), hyperfactorial(t.n()), "clp_count"); }

Partition lambda_of(const DentSet& s) {
  const auto& p = s.positions();
  std::vector<int> parts(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) parts[p.size() - 1 - i] = p[i] - static_cast<int>(i + 1);
  return Partition(std::move(parts));
}

QPolynomial delta1_q(const DentSet& s) {
  QPolynomial out(1L);
  const auto& p = s.positions();
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) out = times_q_gap(out, p[i], p[j]);
  return out;
}

QPolynomial delta2_q(const DentSet& s, const DentSet& t) {
  require_disjoint(s, t);
  QPolynomial out(1L);
  for (int x : s)
    for (int y : t) out = x < y ? times_q_gap(out, x, y) : times_q_gap(out, y, x);
  return out;
}

QPolynomial schur_principal(const DentSet& s) {
  // delta1_q(S) / delta1_q([n]), divided one [t-s]_q factor at a time.
  QPolynomial num = delta1_q(s);
  const long n = static_cast<long>(s.size());
  std::size_t shift = 0;
  for (long j = 1; j < n; ++j) {
    for (long i = 1; i <= j; ++i) num = div_q_int_exact(num, i);  // pairs (j+1-i, j+1)
    shift += static_cast<std::size_t>(j * (j + 1) / 2);
  }
  try {
    return num.unshifted(shift);
  } catch (const InexactDivision&) {
    throw InexactDivision("schur_principal: power of q does not divide");
  }
}

QPolynomial clp_count_q(const Trapezoid& t) {
  return schur_principal(t.dents()).shifted(static_cast<std::size_t>(lambda_of(t.dents()).size()));
}

void for_each_subset(const DentSet& from, std::size_t k, const std::function<void(const DentSet&)>& fn) {
  const auto& p = from.positions();
  if (k > p.size()) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<int> pick(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) pick[i] = p[idx[i]];
    fn(DentSet(pick));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == p.size() - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<DentSet> crossing_sets(const DentedHexagon& h) {
  std::vector<DentSet> out;
  for_each_subset(h.free_positions(), static_cast<std::size_t>(h.crossings()),
                  [&](const DentSet& z) { out.push_back(z); });
  return out;
}

std::vector<DentSet> symmetric_crossing_sets(const DentedHexagon& h) {
  // Choose whole mirror pairs {i, k+1-i}, plus the midpoint when k is odd.
  const int k = h.diagonal();
  const DentSet free = h.free_positions();
  std::vector<int> lows;
  for (int p : free)
    if (2 * p < k + 1 && free.contains(k + 1 - p)) lows.push_back(p);
  const bool has_mid = (k % 2 == 1) && free.contains((k + 1) / 2);
  const int need = h.crossings();

  std::vector<DentSet> out;
  for (int use_mid = 0; use_mid <= (has_mid ? 1 : 0); ++use_mid) {
    const int rest = need - use_mid;
    if (rest < 0 || rest % 2 != 0) continue;
    for_each_subset(DentSet(lows), static_cast<std::size_t>(rest / 2), [&](const DentSet& half) {
      std::vector<int> z(half.positions());
      if (use_mid) z.push_back((k + 1) / 2);
      for (int p : half) z.push_back(k + 1 - p);
      out.push_back(DentSet::from_unordered(std::move(z)));
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

Integer hex_count(const DentedHexagon& h) {
  Integer total = 0;
  for (const DentSet& z : crossing_sets(h))
    total += delta1(set_union(h.up_dents(), z)) * delta1(set_union(h.down_dents(), z));
  return divide_exact(total, hyperfactorial(h.b()) * hyperfactorial(h.c()), "hex_count");
}

long alpha_of_Z(const DentedHexagon& h, const DentSet& z) {
  const long a = h.a(), b = h.b(), c = h.c();
  return h.up_dents().sum() - (b + c) * h.down_dents().sum() + (1 - b - c) * z.sum() - b * (b + 1) / 2 +
         (a + b + 1) * (b + 1) * c - (b + 1) * c * (c + 1) / 2 + (a + b + 1) * c * (c - 1) / 2;
}

QPolynomial hex_count_q(const DentedHexagon& h) { return hex_count_q(h, alpha_of_Z); }

QPolynomial hex_count_q(const DentedHexagon& h, const AlphaFn& alpha) {
  // Individual exponents may be negative (the Schur factor then carries the
  // missing powers of q), so sum as a Laurent polynomial with a common offset.
  std::vector<std::pair<long, QPolynomial>> terms;
  long low = 0;
  for (const DentSet& z : crossing_sets(h)) {
    const long e = alpha(h, z);
    low = std::min(low, e);
    terms.emplace_back(e, schur_principal(set_union(h.up_dents(), z)) * schur_principal(set_union(h.down_dents(), z)));
  }
  QPolynomial total;
  for (const auto& [e, p] : terms) total += p.shifted(static_cast<std::size_t>(e - low));
  try {
    return total.unshifted(static_cast<std::size_t>(-low));
  } catch (const InexactDivision&) {
    throw std::logic_error("hex_count_q: sum has negative powers of q for " + describe(h));
  }
}

Integer sym_count(const DentedHexagon& h) {
  if (!is_centrally_symmetric(h))
    throw DomainError("central symmetry", describe(h) + " is not centrally symmetric (need b = c and Y = X reflected)");
  Integer total = 0;
  for (const DentSet& z : symmetric_crossing_sets(h)) total += delta1(set_union(h.up_dents(), z));
  return divide_exact(total, hyperfactorial(h.b()), "sym_count");
}

}  // namespace lozenge
