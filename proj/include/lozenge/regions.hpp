#pragma once

// Region descriptors (dented trapezoids and doubly-dented hexagons) and the
// explicit unit-triangle geometry the brute-force oracle works on.
//
// Lattice conventions used throughout:
//  * Rows are numbered 1..height from the region's top line. Row r is the
//    strip between horizontal lines r-1 and r.
//  * A lattice point on line L has horizontal index i; its abscissa is
//    i - L/2, so lines further down are shifted half a unit left.
//  * Up-triangle U(r,i) has base [i,i+1] on line r and apex i on line r-1.
//    Down-triangle D(r,i) has base [i,i+1] on line r-1 and apex i+1 on line r.
//  * Lozenges: right = U(r,i)+D(r,i) (up-triangle left of its partner),
//    left = D(r,i-1)+U(r,i), vertical = U(r,i)+D(r+1,i).

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lozenge/exact.hpp"

namespace lozenge {

/// Strictly increasing set of positive lattice positions.
class DentSet {
 public:
  DentSet() = default;
  DentSet(std::initializer_list<int> positions);
  explicit DentSet(std::vector<int> positions);

  /// Sorts; rejects duplicates and nonpositive entries.
  static DentSet from_unordered(std::vector<int> positions);
  /// {1, ..., k}.
  static DentSet range(int k);

  const std::vector<int>& positions() const noexcept { return pos_; }
  std::size_t size() const noexcept { return pos_.size(); }
  bool empty() const noexcept { return pos_.empty(); }
  bool contains(int p) const;
  int max() const noexcept { return pos_.empty() ? 0 : pos_.back(); }
  long sum() const noexcept;

  auto begin() const noexcept { return pos_.begin(); }
  auto end() const noexcept { return pos_.end(); }

  friend bool operator==(const DentSet&, const DentSet&) = default;
  friend auto operator<=>(const DentSet&, const DentSet&) = default;

 private:
  std::vector<int> pos_;
};

DentSet set_union(const DentSet& s, const DentSet& t);
DentSet set_intersection(const DentSet& s, const DentSet& t);
DentSet set_difference(const DentSet& s, const DentSet& t);
bool disjoint(const DentSet& s, const DentSet& t);
std::string to_string(const DentSet& s);

/// {k+1-s : s in S}. Throws DomainError if max(S) > k.
DentSet reflect_set(const DentSet& s, int k);
bool is_k_symmetric(const DentSet& s, int k);

/// T_{m,n}(S): top side m, slant sides n, bottom m+n with up-pointing
/// triangles removed at bottom positions S, |S| = n.
class Trapezoid {
 public:
  static Trapezoid make(int m, int n, DentSet dents);

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  const DentSet& dents() const noexcept { return dents_; }

  friend bool operator==(const Trapezoid&, const Trapezoid&) = default;

 private:
  Trapezoid(int m, int n, DentSet dents) : m_(m), n_(n), dents_(std::move(dents)) {}
  int m_;
  int n_;
  DentSet dents_;
};

/// V_{a,b,c}(X,Y): hexagon with sides a, b, c, a+b-c, c, b (clockwise from
/// the top) whose horizontal diagonal has up-triangles removed at X and
/// down-triangles removed at Y.
class DentedHexagon {
 public:
  int a() const noexcept { return a_; }
  int b() const noexcept { return b_; }
  int c() const noexcept { return c_; }
  const DentSet& up_dents() const noexcept { return x_; }
  const DentSet& down_dents() const noexcept { return y_; }

  /// a+b, the length of the diagonal.
  int diagonal() const noexcept { return a_ + b_; }
  /// Number of vertical lozenges every tiling has across the diagonal.
  int crossings() const noexcept { return b_ - static_cast<int>(x_.size()); }
  /// Diagonal positions carrying no dent.
  DentSet free_positions() const;

  friend bool operator==(const DentedHexagon&, const DentedHexagon&) = default;

 private:
  friend DentedHexagon validate_hexagon(int, int, int, DentSet, DentSet);
  DentedHexagon(int a, int b, int c, DentSet x, DentSet y)
      : a_(a), b_(b), c_(c), x_(std::move(x)), y_(std::move(y)) {}
  int a_;
  int b_;
  int c_;
  DentSet x_;
  DentSet y_;
};

/// Throws DomainError naming the violated clause.
DentedHexagon validate_hexagon(int a, int b, int c, DentSet up_dents, DentSet down_dents);

bool is_centrally_symmetric(const DentedHexagon& h);

/// Fixes vertical lozenges across the diagonal at Z and returns the upper
/// trapezoid T_{a,b}(X u Z) and the lower part rotated into
/// T_{a+b-c,c}((Y u Z) reflected in a+b).
std::pair<Trapezoid, Trapezoid> split_along_diagonal(const DentedHexagon& h, const DentSet& z);

std::string describe(const Trapezoid& t);
std::string describe(const DentedHexagon& h);

struct Cell {
  int row;
  int index;
  bool up;
  bool present;

  /// Left-to-right order key within a row.
  int slot() const noexcept { return 2 * index + (up ? 0 : 1); }
  /// Twice the centroid abscissa.
  int x2() const noexcept { return 2 * index - row + (up ? 1 : 2); }
};

struct CellKey {
  int row;
  int index;
  bool up;
  friend bool operator==(const CellKey&, const CellKey&) = default;
  friend auto operator<=>(const CellKey&, const CellKey&) = default;
};

/// Unit triangles of a region, rows top to bottom, each row left to right.
/// Removed dents are kept with present = false.
class CellGrid {
 public:
  int height() const noexcept { return height_; }
  /// Line number of the labeled segment row (the diagonal of a hexagon, the
  /// bottom of a trapezoid); position p on it is the segment [p-1, p].
  int diagonal_line() const noexcept { return diagonal_; }

  const std::vector<Cell>& cells() const noexcept { return cells_; }
  std::optional<std::size_t> find(CellKey key) const;
  bool is_present(CellKey key) const;

  std::size_t present_count() const noexcept;
  std::size_t up_count() const noexcept;
  std::size_t down_count() const noexcept;
  int row_cell_count(int row) const;

 private:
  friend CellGrid build_cells(const DentedHexagon&);
  friend CellGrid build_cells(const Trapezoid&);

  void add_row(int row, int first_up, int last_up, int first_down, int last_down);
  void remove(CellKey key);

  int height_ = 0;
  int diagonal_ = 0;
  std::vector<Cell> cells_;
  // Per row: index of its first cell in cells_, smallest slot, cell count.
  struct RowSpan {
    std::size_t first;
    int min_slot;
    int count;
  };
  std::vector<RowSpan> rows_;
};

CellGrid build_cells(const DentedHexagon& h);
CellGrid build_cells(const Trapezoid& t);

enum class LozengeKind { left, vertical, right };

/// A lozenge named by its up-triangle U(up_row, position) and orientation.
/// `row` is the line of its bottom side: up_row for left/right, up_row+1 for
/// vertical.
struct Lozenge {
  LozengeKind kind;
  int row;
  int position;

  int up_row() const noexcept { return kind == LozengeKind::vertical ? row - 1 : row; }
  CellKey up_cell() const noexcept { return {up_row(), position, true}; }
  CellKey down_cell() const noexcept;

  friend bool operator==(const Lozenge&, const Lozenge&) = default;
  friend auto operator<=>(const Lozenge&, const Lozenge&) = default;
};

/// Builds the lozenge covering two edge-adjacent cells; nullopt if they are
/// not adjacent.
std::optional<Lozenge> lozenge_of(CellKey first, CellKey second);

struct Tiling {
  std::vector<Lozenge> lozenges;

  /// Sorted copy; tilings compare equal iff canonical forms match.
  Tiling canonical() const;
  friend bool operator==(const Tiling&, const Tiling&) = default;
};

/// True iff every present cell is covered exactly once and nothing else is.
bool is_tiling_of(const CellGrid& grid, const Tiling& t);

const char* to_string(LozengeKind k);

}  // namespace lozenge
