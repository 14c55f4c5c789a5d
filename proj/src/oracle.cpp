#include "lozenge/oracle.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace lozenge {

namespace {

constexpr int kMaxWindow = 63;

// Present cells in row-major order and, for each, the lozenges that pair it
// with a later cell. Earlier neighbours are always covered by the time the
// sweep reaches a cell, so these are the only choices.
struct Frontier {
  struct Option {
    int offset;
    Lozenge lozenge;
  };

  std::vector<std::size_t> cell_of;
  std::vector<long> position_of;
  std::vector<std::vector<Option>> options;
  int window = 1;

  explicit Frontier(const CellGrid& g) {
    const auto& cells = g.cells();
    position_of.assign(cells.size(), -1);
    for (std::size_t id = 0; id < cells.size(); ++id) {
      if (!cells[id].present) continue;
      position_of[id] = static_cast<long>(cell_of.size());
      cell_of.push_back(id);
    }
    options.resize(cell_of.size());
    for (std::size_t p = 0; p < cell_of.size(); ++p) {
      const Cell& c = cells[cell_of[p]];
      auto add = [&](CellKey partner, Lozenge loz) {
        auto id = g.find(partner);
        if (!id || !cells[*id].present) return;
        const long off = position_of[*id] - static_cast<long>(p);
        if (off <= 0) throw std::logic_error("frontier: partner precedes cell");
        if (off >= kMaxWindow)
          throw DomainError("frontier width", "region rows too long for the oracle (window " + std::to_string(off) + ")");
        window = std::max(window, static_cast<int>(off) + 1);
        options[p].push_back({static_cast<int>(off), loz});
      };
      if (c.up) {
        add({c.row + 1, c.index, false}, {LozengeKind::vertical, c.row + 1, c.index});
        add({c.row, c.index, false}, {LozengeKind::right, c.row, c.index});
      } else {
        add({c.row, c.index + 1, true}, {LozengeKind::left, c.row, c.index + 1});
      }
    }
  }

  std::size_t size() const noexcept { return cell_of.size(); }
};

// Sweep positions [begin, end) over a map of frontier masks (bit j: position
// p+j already covered). `weigh` returns the factor for placing a lozenge, or
// nullopt to forbid it.
template <class T, class Weigh>
std::map<std::uint64_t, T> sweep(const Frontier& f, std::size_t begin, std::size_t end,
                                 std::map<std::uint64_t, T> states, Weigh&& weigh) {
  for (std::size_t p = begin; p < end; ++p) {
    std::map<std::uint64_t, T> next;
    for (auto& [mask, value] : states) {
      if (mask & 1u) {
        auto [it, fresh] = next.try_emplace(mask >> 1, value);
        if (!fresh) it->second += value;
        continue;
      }
      for (const auto& opt : f.options[p]) {
        const std::uint64_t bit = std::uint64_t{1} << opt.offset;
        if (mask & bit) continue;
        std::optional<T> w = weigh(opt.lozenge);
        if (!w) continue;
        T contribution = value * *w;
        auto [it, fresh] = next.try_emplace((mask | bit) >> 1, std::move(contribution));
        if (!fresh) it->second += contribution;
      }
    }
    states = std::move(next);
  }
  return states;
}

template <class T, class Weigh>
T total(const CellGrid& g, const T& one, Weigh&& weigh) {
  const Frontier f(g);
  std::map<std::uint64_t, T> start;
  start.emplace(0, one);
  auto end = sweep(f, 0, f.size(), std::move(start), weigh);
  auto it = end.find(0);
  return it == end.end() ? T{} : it->second;
}

// Restricts vertical lozenges across the labeled line to positions z.
auto crossing_rule(const CellGrid& g, const DentSet& z) {
  return [line = g.diagonal_line(), z](const Lozenge& l) {
    if (l.up_row() != line || l.kind == LozengeKind::left) return true;
    const bool crosses = l.kind == LozengeKind::vertical;
    return crosses == z.contains(l.position + 1);
  };
}

template <class T>
T power(const T& x, long k, const T& one) {
  T out = one;
  for (long i = 0; i < k; ++i) out = out * x;
  return out;
}

template <class T>
struct SchurTableaux {
  std::span<const T> points;
  std::map<std::pair<std::vector<int>, std::size_t>, T> memo;

  // Sum over SSYT of shape lambda with entries <= n.
  T eval(const std::vector<int>& lambda, std::size_t n) {
    std::size_t nonzero = 0;
    while (nonzero < lambda.size() && lambda[nonzero] > 0) ++nonzero;
    if (nonzero > n) return T(0L);
    if (nonzero == 0) return T(1L);
    auto key = std::make_pair(std::vector<int>(lambda.begin(), lambda.begin() + static_cast<long>(nonzero)), n);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // Entries equal to n form a horizontal strip lambda / mu with
    // lambda_{i+1} <= mu_i <= lambda_i and at most n-1 rows left.
    const std::vector<int>& lam = key.first;
    std::vector<int> mu(lam.size(), 0);
    T acc(0L);
    const long full = std::accumulate(lam.begin(), lam.end(), 0L);
    auto rec = [&](auto&& self, std::size_t i, long mu_size) -> void {
      if (i == lam.size()) {
        if (lam.size() > n - 1 && mu.back() > 0) return;
        acc += power(points[n - 1], full - mu_size, T(1L)) * eval(mu, n - 1);
        return;
      }
      const int lo = i + 1 < lam.size() ? lam[i + 1] : 0;
      for (int v = lo; v <= lam[i]; ++v) {
        mu[i] = v;
        self(self, i + 1, mu_size + v);
      }
    };
    rec(rec, 0, 0);
    memo.emplace(std::move(key), acc);
    return acc;
  }
};

template <class T>
T schur_impl(const Partition& lambda, std::span<const T> points) {
  SchurTableaux<T> s{points, {}};
  return s.eval(lambda.parts(), points.size());
}

}  // namespace

std::size_t enumerate_tilings(const CellGrid& g, const std::function<bool(const Tiling&)>& visit) {
  const Frontier f(g);
  std::vector<char> covered(f.size(), 0);
  Tiling current;
  std::size_t visited = 0;
  bool stop = false;

  auto dfs = [&](auto&& self, std::size_t p) -> void {
    while (p < f.size() && covered[p]) ++p;
    if (p == f.size()) {
      ++visited;
      if (!visit(current)) stop = true;
      return;
    }
    for (const auto& opt : f.options[p]) {
      const std::size_t partner = p + static_cast<std::size_t>(opt.offset);
      if (covered[partner]) continue;
      covered[p] = covered[partner] = 1;
      current.lozenges.push_back(opt.lozenge);
      self(self, p + 1);
      current.lozenges.pop_back();
      covered[p] = covered[partner] = 0;
      if (stop) return;
    }
  };
  dfs(dfs, 0);
  return visited;
}

std::optional<Tiling> nth_tiling(const CellGrid& g, std::size_t index) {
  std::optional<Tiling> found;
  std::size_t seen = 0;
  enumerate_tilings(g, [&](const Tiling& t) {
    if (seen++ == index) {
      found = t;
      return false;
    }
    return true;
  });
  return found;
}

Integer count_tilings(const CellGrid& g) {
  return total<Integer>(g, Integer(1), [](const Lozenge&) { return std::optional<Integer>(1); });
}

QPolynomial tiling_weight_q(const Tiling& t) {
  std::size_t e = 0;
  for (const Lozenge& l : t.lozenges)
    if (l.kind == LozengeKind::right) e += static_cast<std::size_t>(l.row);
  return QPolynomial::q_power(e);
}

QPolynomial generating_function_q(const CellGrid& g) {
  return total<QPolynomial>(g, QPolynomial(1L), [](const Lozenge& l) {
    return std::optional<QPolynomial>(
        l.kind == LozengeKind::right ? QPolynomial::q_power(static_cast<std::size_t>(l.row)) : QPolynomial(1L));
  });
}

namespace {

template <class T>
T weighted_impl(const CellGrid& g, std::span<const T> row_weights) {
  if (row_weights.size() != static_cast<std::size_t>(g.height()))
    throw DomainError("weight count", "need one weight per row (" + std::to_string(g.height()) + "), got " +
                                          std::to_string(row_weights.size()));
  return total<T>(g, T(1L), [&](const Lozenge& l) {
    return std::optional<T>(l.kind == LozengeKind::right ? row_weights[static_cast<std::size_t>(l.row - 1)] : T(1L));
  });
}

}  // namespace

Rational weighted_count(const CellGrid& g, std::span<const Rational> row_weights) {
  return weighted_impl<Rational>(g, row_weights);
}

QPolynomial weighted_count(const CellGrid& g, std::span<const QPolynomial> row_weights) {
  return weighted_impl<QPolynomial>(g, row_weights);
}

Integer count_with_crossings(const CellGrid& g, const DentSet& z) {
  auto allowed = crossing_rule(g, z);
  return total<Integer>(g, Integer(1), [&](const Lozenge& l) {
    return allowed(l) ? std::optional<Integer>(1) : std::nullopt;
  });
}

QPolynomial generating_function_with_crossings(const CellGrid& g, const DentSet& z) {
  auto allowed = crossing_rule(g, z);
  return total<QPolynomial>(g, QPolynomial(1L), [&](const Lozenge& l) -> std::optional<QPolynomial> {
    if (!allowed(l)) return std::nullopt;
    return l.kind == LozengeKind::right ? QPolynomial::q_power(static_cast<std::size_t>(l.row)) : QPolynomial(1L);
  });
}

Rational schur_ssyt(const Partition& lambda, std::span<const Rational> points) {
  return schur_impl<Rational>(lambda, points);
}

QPolynomial schur_ssyt(const Partition& lambda, std::span<const QPolynomial> points) {
  return schur_impl<QPolynomial>(lambda, points);
}

std::optional<std::vector<std::size_t>> rotation_map(const CellGrid& g) {
  const auto& cells = g.cells();
  // Centroids in units of (1/2 horizontally, 1/3 of a row vertically).
  long n = 0, sx = 0, sy = 0;
  for (const Cell& c : cells) {
    if (!c.present) continue;
    ++n;
    sx += c.x2();
    sy += 3 * c.row - (c.up ? 1 : 2);
  }
  std::vector<std::size_t> map(cells.size(), 0);
  if (n == 0) return map;
  for (std::size_t id = 0; id < cells.size(); ++id) {
    const Cell& c = cells[id];
    if (!c.present) continue;
    const long rx = 2 * sx - n * c.x2();
    const long ry = 2 * sy - n * (3 * c.row - (c.up ? 1 : 2));
    if (rx % n != 0 || ry % n != 0) return std::nullopt;
    const long x2 = rx / n, y3 = ry / n;
    // A rotated up-triangle is a down-triangle and vice versa.
    const bool up = !c.up;
    const long row = up ? (y3 + 1) / 3 : (y3 + 2) / 3;
    if ((up ? 3 * row - 1 : 3 * row - 2) != y3) return std::nullopt;
    const long twice_index = x2 + row - (up ? 1 : 2);
    if (twice_index % 2 != 0) return std::nullopt;
    auto target = g.find({static_cast<int>(row), static_cast<int>(twice_index / 2), up});
    if (!target || !cells[*target].present) return std::nullopt;
    map[id] = *target;
  }
  return map;
}

bool is_centrally_symmetric(const CellGrid& g) { return rotation_map(g).has_value(); }

Tiling rotate180(const CellGrid& g, const Tiling& t) {
  auto map = rotation_map(g);
  if (!map) throw DomainError("central symmetry", "region is not invariant under rotation by 180 degrees");
  const auto& cells = g.cells();
  auto image = [&](CellKey key) {
    const Cell& c = cells[(*map)[*g.find(key)]];
    return CellKey{c.row, c.index, c.up};
  };
  Tiling out;
  out.lozenges.reserve(t.lozenges.size());
  for (const Lozenge& l : t.lozenges) {
    auto r = lozenge_of(image(l.up_cell()), image(l.down_cell()));
    if (!r) throw std::logic_error("rotate180: image cells are not adjacent");
    out.lozenges.push_back(*r);
  }
  return out;
}

Integer count_centrally_symmetric(const CellGrid& g) {
  auto map = rotation_map(g);
  if (!map) throw DomainError("central symmetry", "region is not invariant under rotation by 180 degrees");
  const Frontier f(g);
  if (f.size() == 0) return Integer(1);

  const int h = g.height();
  bool row_split = h % 2 == 0;
  for (std::size_t id = 0; row_split && id < g.cells().size(); ++id)
    if (g.cells()[id].present && g.cells()[(*map)[id]].row != h + 1 - g.cells()[id].row) row_split = false;

  if (!row_split) {
    // No clean half; filter the full enumeration.
    Integer fixed = 0;
    enumerate_tilings(g, [&](const Tiling& t) {
      if (rotate180(g, t).canonical() == t.canonical()) ++fixed;
      return true;
    });
    return fixed;
  }

  // A fixed tiling is determined by its lozenges meeting the upper half.
  // Sweep the upper half; the only lozenges leaving it are vertical ones into
  // row h/2+1, and their set must be closed under the rotation.
  std::size_t mid = 0;
  while (mid < f.size() && g.cells()[f.cell_of[mid]].row <= h / 2) ++mid;
  std::map<std::uint64_t, Integer> start;
  start.emplace(0, Integer(1));
  auto states = sweep(f, 0, mid, std::move(start), [](const Lozenge&) { return std::optional<Integer>(1); });

  Integer fixed = 0;
  for (const auto& [mask, value] : states) {
    bool closed = true;
    for (int j = 0; closed && j < kMaxWindow; ++j) {
      if (!(mask >> j & 1u)) continue;
      const Cell& below = g.cells()[f.cell_of[mid + static_cast<std::size_t>(j)]];
      const std::size_t above = *g.find({below.row - 1, below.index, true});
      const long image = f.position_of[(*map)[above]] - static_cast<long>(mid);
      closed = image >= 0 && image < kMaxWindow && (mask >> image & 1u);
    }
    if (closed) fixed += value;
  }
  return fixed;
}

}  // namespace lozenge
