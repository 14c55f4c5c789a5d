#include "lozenge/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <utility>
#include <vector>

namespace lozenge {

namespace {

bool crosses_diagonal(const CellGrid& g, const Lozenge& l) {
  return l.kind == LozengeKind::vertical && l.up_row() == g.diagonal_line();
}

void trim_right(std::string& s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
}

// Cell id -> glyph for a tiling.
std::vector<char> tiling_glyphs(const CellGrid& g, const Tiling& t) {
  std::vector<char> glyph(g.cells().size(), '?');
  for (const Lozenge& l : t.lozenges) {
    char c = '/';
    if (l.kind == LozengeKind::left) c = '\\';
    if (l.kind == LozengeKind::vertical) c = crosses_diagonal(g, l) ? '#' : '|';
    for (CellKey key : {l.up_cell(), l.down_cell()})
      if (auto id = g.find(key)) glyph[*id] = c;
  }
  return glyph;
}

struct Point {
  double x;
  double y;
};

class SvgCanvas {
 public:
  explicit SvgCanvas(const CellGrid& g) {
    bool first = true;
    for (const Cell& c : g.cells()) {
      for (auto [i, line] : corners(c)) {
        const double x = i - line / 2.0;
        if (first || x < xmin_) xmin_ = x;
        if (first || x > xmax_) xmax_ = x;
        first = false;
      }
    }
    height_ = g.height();
  }

  static std::array<std::pair<int, int>, 3> corners(const Cell& c) {
    if (c.up) return {{{c.index, c.row}, {c.index + 1, c.row}, {c.index, c.row - 1}}};
    return {{{c.index, c.row - 1}, {c.index + 1, c.row - 1}, {c.index + 1, c.row}}};
  }

  Point at(int i, int line) const {
    return {kMargin + (i - line / 2.0 - xmin_) * kUnit, kMargin + line * kUnit * std::sqrt(3.0) / 2.0};
  }

  double width() const { return 2 * kMargin + (xmax_ - xmin_) * kUnit; }
  double height() const { return 2 * kMargin + height_ * kUnit * std::sqrt(3.0) / 2.0; }

  template <std::size_t N>
  std::string polygon(const std::array<std::pair<int, int>, N>& pts, const std::string& cls) const {
    std::string out = "  <polygon class=\"" + cls + "\" points=\"";
    for (std::size_t k = 0; k < N; ++k) {
      if (k) out += ' ';
      out += fmt(at(pts[k].first, pts[k].second));
    }
    return out + "\"/>\n";
  }

  static std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
  }

  std::string fmt(Point p) const { return num(p.x) + "," + num(p.y); }

 private:
  static constexpr double kUnit = 20.0;
  static constexpr double kMargin = 10.0;
  double xmin_ = 0;
  double xmax_ = 0;
  int height_ = 0;
};

std::array<std::pair<int, int>, 4> lozenge_corners(const Lozenge& l) {
  const int i = l.position;
  const int r = l.up_row();
  switch (l.kind) {
    case LozengeKind::right:
      return {{{i, r}, {i + 1, r}, {i + 1, r - 1}, {i, r - 1}}};
    case LozengeKind::left:
      return {{{i - 1, r - 1}, {i, r - 1}, {i + 1, r}, {i, r}}};
    case LozengeKind::vertical:
      break;
  }
  return {{{i, r - 1}, {i + 1, r}, {i + 1, r + 1}, {i, r}}};
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_ascii(const CellGrid& g, const std::optional<Tiling>& t, const std::string& title) {
  std::ostringstream os;
  os << title << "\n";
  const auto& cells = g.cells();
  if (cells.empty()) {
    os << "(empty region)\n";
    return os.str();
  }
  int lo = cells.front().x2(), hi = lo;
  for (const Cell& c : cells) {
    lo = std::min(lo, c.x2());
    hi = std::max(hi, c.x2());
  }
  const std::vector<char> glyph = t ? tiling_glyphs(g, *t) : std::vector<char>{};
  std::vector<std::string> rows(static_cast<std::size_t>(g.height()), std::string(static_cast<std::size_t>(hi - lo + 1), ' '));
  for (std::size_t id = 0; id < cells.size(); ++id) {
    const Cell& c = cells[id];
    char ch = '*';
    if (c.present) ch = t ? glyph[id] : (c.up ? '^' : 'v');
    rows[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.x2() - lo)] = ch;
  }
  const int diag = g.diagonal_line();
  for (int r = 1; r <= g.height(); ++r) {
    std::string line = rows[static_cast<std::size_t>(r - 1)];
    trim_right(line);
    char label[16];
    std::snprintf(label, sizeof label, "%2d ", r);
    os << label << line << "\n";
    if (r == diag && r < g.height()) {
      std::string rule(static_cast<std::size_t>(hi - lo + 1), ' ');
      for (const Cell& c : cells)
        if (c.row == r) rule[static_cast<std::size_t>(c.x2() - lo)] = '-';
      trim_right(rule);
      os << "   " << rule << "\n";
    }
  }
  return os.str();
}

std::string render_svg(const CellGrid& g, const std::optional<Tiling>& t, const std::string& title) {
  const SvgCanvas canvas(g);
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << SvgCanvas::num(canvas.width()) << "\" height=\""
     << SvgCanvas::num(canvas.height()) << "\">\n";
  os << "  <title>" << xml_escape(title) << "</title>\n";
  os << "  <style>"
        ".up{fill:#ffffff}.down{fill:#dddddd}.dent{fill:#333333}"
        ".left{fill:#8fb3d9}.right{fill:#e8c170}.vertical{fill:#9ccc9c}.crossing{fill:#f4a6c6}"
        "polygon{stroke:#222222;stroke-width:0.5}.diagonal{stroke:#cc0000;stroke-width:1.5}"
        "</style>\n";
  for (const Cell& c : g.cells()) {
    if (!c.present) os << canvas.polygon(SvgCanvas::corners(c), "dent");
    else if (!t) os << canvas.polygon(SvgCanvas::corners(c), c.up ? "up" : "down");
  }
  if (t) {
    for (const Lozenge& l : t->lozenges) {
      std::string cls = to_string(l.kind);
      if (crosses_diagonal(g, l)) cls += " crossing";
      os << canvas.polygon(lozenge_corners(l), cls);
    }
  }
  const int diag = g.diagonal_line();
  if (diag > 0 && diag <= g.height()) {
    int lo = 0, hi = 0;
    bool any = false;
    for (const Cell& c : g.cells()) {
      if (c.row != diag || !c.up) continue;
      lo = any ? std::min(lo, c.index) : c.index;
      hi = any ? std::max(hi, c.index + 1) : c.index + 1;
      any = true;
    }
    if (any) {
      const Point a = canvas.at(lo, diag), b = canvas.at(hi, diag);
      os << "  <line class=\"diagonal\" x1=\"" << SvgCanvas::num(a.x) << "\" y1=\"" << SvgCanvas::num(a.y)
         << "\" x2=\"" << SvgCanvas::num(b.x) << "\" y2=\"" << SvgCanvas::num(b.y) << "\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace lozenge
