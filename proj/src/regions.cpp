#include "lozenge/regions.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <numeric>
#include <sstream>

namespace lozenge {

namespace {

void check_strict(const std::vector<int>& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1) throw DomainError("dent set", "positions must be positive, got " + std::to_string(p[i]));
    if (i > 0 && p[i] <= p[i - 1])
      throw DomainError("dent set", "positions must be strictly increasing");
  }
}

}  // namespace

DentSet::DentSet(std::initializer_list<int> positions) : pos_(positions) { check_strict(pos_); }

DentSet::DentSet(std::vector<int> positions) : pos_(std::move(positions)) { check_strict(pos_); }

DentSet DentSet::from_unordered(std::vector<int> positions) {
  std::sort(positions.begin(), positions.end());
  return DentSet(std::move(positions));
}

DentSet DentSet::range(int k) {
  std::vector<int> p(static_cast<std::size_t>(std::max(k, 0)));
  std::iota(p.begin(), p.end(), 1);
  return DentSet(std::move(p));
}

bool DentSet::contains(int p) const { return std::binary_search(pos_.begin(), pos_.end(), p); }

long DentSet::sum() const noexcept { return std::accumulate(pos_.begin(), pos_.end(), 0L); }

DentSet set_union(const DentSet& s, const DentSet& t) {
  std::vector<int> out;
  std::set_union(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(out));
  return DentSet(std::move(out));
}

DentSet set_intersection(const DentSet& s, const DentSet& t) {
  std::vector<int> out;
  std::set_intersection(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(out));
  return DentSet(std::move(out));
}

DentSet set_difference(const DentSet& s, const DentSet& t) {
  std::vector<int> out;
  std::set_difference(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(out));
  return DentSet(std::move(out));
}

bool disjoint(const DentSet& s, const DentSet& t) { return set_intersection(s, t).empty(); }

std::string to_string(const DentSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.positions()[i]);
  }
  return out + "}";
}

DentSet reflect_set(const DentSet& s, int k) {
  if (s.max() > k)
    throw DomainError("reflect range", "element " + std::to_string(s.max()) + " exceeds " + std::to_string(k));
  std::vector<int> out;
  out.reserve(s.size());
  for (auto it = s.positions().rbegin(); it != s.positions().rend(); ++it) out.push_back(k + 1 - *it);
  return DentSet(std::move(out));
}

bool is_k_symmetric(const DentSet& s, int k) { return s.max() <= k && reflect_set(s, k) == s; }

Trapezoid Trapezoid::make(int m, int n, DentSet dents) {
  if (m < 0 || n < 0) throw DomainError("nonnegative sides", "m and n must be >= 0");
  if (dents.size() != static_cast<std::size_t>(n))
    throw DomainError("dent count", "trapezoid needs exactly n = " + std::to_string(n) + " dents");
  if (dents.max() > m + n)
    throw DomainError("range", "dent " + std::to_string(dents.max()) + " exceeds m+n = " + std::to_string(m + n));
  return Trapezoid(m, n, std::move(dents));
}

DentSet DentedHexagon::free_positions() const {
  return set_difference(DentSet::range(diagonal()), set_union(x_, y_));
}

DentedHexagon validate_hexagon(int a, int b, int c, DentSet up_dents, DentSet down_dents) {
  if (a < 0 || b < 0 || c < 0) throw DomainError("nonnegative sides", "a, b and c must be >= 0");
  if (c > a + b) throw DomainError("side bound (c <= a+b)", "c = " + std::to_string(c) + " > a+b = " + std::to_string(a + b));
  if (up_dents.max() > a + b || down_dents.max() > a + b)
    throw DomainError("range", "dent positions must lie in [1, a+b]");
  const long slack_up = b - static_cast<long>(up_dents.size());
  const long slack_down = c - static_cast<long>(down_dents.size());
  if (slack_up != slack_down)
    throw DomainError("balance (b-|X| = c-|Y|)",
                      "b-|X| = " + std::to_string(slack_up) + " but c-|Y| = " + std::to_string(slack_down));
  if (slack_up < 0) throw DomainError("slack (b-|X| >= 0)", "more up-dents than b");
  const long room = (a + b) - static_cast<long>(set_union(up_dents, down_dents).size());
  if (slack_up > room)
    throw DomainError("room (b-|X| <= |[a+b] \\ (X u Y)|)",
                      std::to_string(slack_up) + " crossings but only " + std::to_string(room) + " free positions");
  return DentedHexagon(a, b, c, std::move(up_dents), std::move(down_dents));
}

bool is_centrally_symmetric(const DentedHexagon& h) {
  return h.b() == h.c() && reflect_set(h.up_dents(), h.diagonal()) == h.down_dents();
}

std::pair<Trapezoid, Trapezoid> split_along_diagonal(const DentedHexagon& h, const DentSet& z) {
  if (!disjoint(z, set_union(h.up_dents(), h.down_dents())) || z.max() > h.diagonal())
    throw DomainError("crossing set", "Z must be a subset of the free diagonal positions");
  if (static_cast<int>(z.size()) != h.crossings())
    throw DomainError("crossing set", "|Z| must equal b-|X| = " + std::to_string(h.crossings()));
  const int k = h.diagonal();
  return {Trapezoid::make(h.a(), h.b(), set_union(h.up_dents(), z)),
          Trapezoid::make(k - h.c(), h.c(), reflect_set(set_union(h.down_dents(), z), k))};
}

std::string describe(const Trapezoid& t) {
  std::ostringstream os;
  os << "T_{" << t.m() << "," << t.n() << "}(" << to_string(t.dents()) << ")";
  return os.str();
}

std::string describe(const DentedHexagon& h) {
  std::ostringstream os;
  os << "V_{" << h.a() << "," << h.b() << "," << h.c() << "}(" << to_string(h.up_dents()) << ","
     << to_string(h.down_dents()) << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// CellGrid

void CellGrid::add_row(int row, int first_up, int last_up, int first_down, int last_down) {
  std::map<int, Cell> by_slot;
  for (int i = first_up; i <= last_up; ++i) by_slot.emplace(2 * i, Cell{row, i, true, true});
  for (int i = first_down; i <= last_down; ++i) by_slot.emplace(2 * i + 1, Cell{row, i, false, true});
  RowSpan span{cells_.size(), by_slot.empty() ? 0 : by_slot.begin()->first, static_cast<int>(by_slot.size())};
  int expect = span.min_slot;
  for (auto& [slot, cell] : by_slot) {
    if (slot != expect++) throw std::logic_error("CellGrid: row slots must be contiguous");
    cells_.push_back(cell);
  }
  rows_.push_back(span);
}

std::optional<std::size_t> CellGrid::find(CellKey key) const {
  if (key.row < 1 || key.row > height_) return std::nullopt;
  const RowSpan& span = rows_[static_cast<std::size_t>(key.row - 1)];
  const int offset = 2 * key.index + (key.up ? 0 : 1) - span.min_slot;
  if (offset < 0 || offset >= span.count) return std::nullopt;
  return span.first + static_cast<std::size_t>(offset);
}

bool CellGrid::is_present(CellKey key) const {
  auto id = find(key);
  return id && cells_[*id].present;
}

void CellGrid::remove(CellKey key) {
  auto id = find(key);
  if (!id) throw std::logic_error("CellGrid: removing a cell outside the region");
  cells_[*id].present = false;
}

std::size_t CellGrid::present_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(cells_.begin(), cells_.end(), [](const Cell& c) { return c.present; }));
}

std::size_t CellGrid::up_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(cells_.begin(), cells_.end(), [](const Cell& c) { return c.present && c.up; }));
}

std::size_t CellGrid::down_count() const noexcept { return present_count() - up_count(); }

int CellGrid::row_cell_count(int row) const {
  if (row < 1 || row > height_) return 0;
  return rows_[static_cast<std::size_t>(row - 1)].count;
}

CellGrid build_cells(const Trapezoid& t) {
  CellGrid g;
  g.height_ = t.n();
  g.diagonal_ = t.n();
  // Row r: top line spans [0, m+r-1], bottom line spans [0, m+r].
  for (int r = 1; r <= t.n(); ++r) g.add_row(r, 0, t.m() + r - 1, 0, t.m() + r - 2);
  for (int p : t.dents()) g.remove({t.n(), p - 1, true});
  return g;
}

CellGrid build_cells(const DentedHexagon& h) {
  CellGrid g;
  const int k = h.diagonal();
  g.height_ = h.b() + h.c();
  g.diagonal_ = h.b();
  for (int r = 1; r <= h.b(); ++r) g.add_row(r, 0, h.a() + r - 1, 0, h.a() + r - 2);
  // Below the diagonal row b+j: top line spans [j-1, k], bottom line [j, k].
  for (int j = 1; j <= h.c(); ++j) g.add_row(h.b() + j, j, k - 1, j - 1, k - 1);
  for (int p : h.up_dents()) g.remove({h.b(), p - 1, true});
  for (int p : h.down_dents()) g.remove({h.b() + 1, p - 1, false});
  return g;
}

// ---------------------------------------------------------------------------
// Lozenges and tilings

CellKey Lozenge::down_cell() const noexcept {
  switch (kind) {
    case LozengeKind::right:
      return {row, position, false};
    case LozengeKind::left:
      return {row, position - 1, false};
    case LozengeKind::vertical:
      break;
  }
  return {row, position, false};
}

std::optional<Lozenge> lozenge_of(CellKey first, CellKey second) {
  if (first.up == second.up) return std::nullopt;
  const CellKey u = first.up ? first : second;
  const CellKey d = first.up ? second : first;
  if (d.row == u.row && d.index == u.index) return Lozenge{LozengeKind::right, u.row, u.index};
  if (d.row == u.row && d.index == u.index - 1) return Lozenge{LozengeKind::left, u.row, u.index};
  if (d.row == u.row + 1 && d.index == u.index) return Lozenge{LozengeKind::vertical, d.row, u.index};
  return std::nullopt;
}

Tiling Tiling::canonical() const {
  Tiling t = *this;
  std::sort(t.lozenges.begin(), t.lozenges.end());
  return t;
}

bool is_tiling_of(const CellGrid& grid, const Tiling& t) {
  std::vector<int> cover(grid.cells().size(), 0);
  for (const Lozenge& l : t.lozenges) {
    for (CellKey key : {l.up_cell(), l.down_cell()}) {
      auto id = grid.find(key);
      if (!id || !grid.cells()[*id].present) return false;
      if (++cover[*id] > 1) return false;
    }
  }
  for (std::size_t i = 0; i < cover.size(); ++i)
    if (grid.cells()[i].present && cover[i] != 1) return false;
  return true;
}

const char* to_string(LozengeKind k) {
  switch (k) {
    case LozengeKind::left:
      return "left";
    case LozengeKind::vertical:
      return "vertical";
    case LozengeKind::right:
      return "right";
  }
  return "?";
}

}  // namespace lozenge
