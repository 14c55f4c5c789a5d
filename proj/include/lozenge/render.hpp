#pragma once

#include <optional>
#include <string>

#include "lozenge/regions.hpp"

namespace lozenge {

// Text drawings of a region, optionally with one of its tilings.
//
// ASCII: one line per row, one character per unit triangle, aligned so that
// the two halves of a vertical lozenge share a column.
//   no tiling:  ^ up-triangle   v down-triangle   * removed (dent)
//   tiling:     / right   \ left   | vertical   # vertical across the diagonal
// A line of '-' marks the labeled diagonal when it lies inside the region.

std::string render_ascii(const CellGrid& g, const std::optional<Tiling>& t, const std::string& title);

/// Standalone SVG; lozenges crossing the diagonal get class "crossing".
std::string render_svg(const CellGrid& g, const std::optional<Tiling>& t, const std::string& title);

}  // namespace lozenge
