#include "lozenge/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lozenge {

namespace {

constexpr double kRowHeight = 0.8660254037844386;  // sqrt(3) / 2

using Point = std::pair<double, double>;

// Lattice coordinates with y growing downward; the diagonal lies at
// y = upper_rows * kRowHeight. Upper row i starts at x = (upper_rows - i)/2,
// lower row r at x = (r - 1)/2. An up-triangle with base corner (x, y) has
// corners (x, y), (x+1, y), (x+1/2, y - kRowHeight). All x values are
// half-integers, so shared corners computed from either side are bit-equal.
std::array<Point, 3> cell_corners(const TriangleCell& c, int upper_rows) {
  if (c.half == HalfPlane::upper) {
    const double x0 = (upper_rows - c.row) / 2.0;
    const double y_base = c.row * kRowHeight;
    const double y_top = (c.row - 1) * kRowHeight;
    if (c.kind == CellKind::up)
      return {{{x0 + c.index - 1, y_base},
               {x0 + c.index, y_base},
               {x0 + c.index - 0.5, y_top}}};
    return {{{x0 + c.index - 0.5, y_top},
             {x0 + c.index + 0.5, y_top},
             {x0 + c.index, y_base}}};
  }
  const double x0 = (c.row - 1) / 2.0;
  const double y_top = (upper_rows + c.row - 1) * kRowHeight;
  const double y_base = (upper_rows + c.row) * kRowHeight;
  if (c.kind == CellKind::down)
    return {{{x0 + c.index - 1, y_top},
             {x0 + c.index, y_top},
             {x0 + c.index - 0.5, y_base}}};
  return {{{x0 + c.index - 0.5, y_base},
           {x0 + c.index + 0.5, y_base},
           {x0 + c.index, y_top}}};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Bounds {
  double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
  bool any = false;
  void add(const Point& p) {
    if (!any) {
      min_x = max_x = p.first;
      min_y = max_y = p.second;
      any = true;
      return;
    }
    min_x = std::min(min_x, p.first);
    max_x = std::max(max_x, p.first);
    min_y = std::min(min_y, p.second);
    max_y = std::max(max_y, p.second);
  }
};

struct Canvas {
  Bounds bounds;
  double scale = 1, margin = 0;
  Point map(const Point& p) const {
    return {(p.first - bounds.min_x) * scale + margin,
            (p.second - bounds.min_y) * scale + margin};
  }
  double width() const { return (bounds.max_x - bounds.min_x) * scale + 2 * margin; }
  double height() const { return (bounds.max_y - bounds.min_y) * scale + 2 * margin; }
};

void emit_polygon(std::ostringstream& out, const Canvas& canvas,
                  const std::vector<Point>& corners, const std::string& cls,
                  const std::string& fill) {
  out << "<polygon class=\"" << cls << "\" fill=\"" << fill << "\" points=\"";
  for (size_t i = 0; i < corners.size(); ++i) {
    Point p = canvas.map(corners[i]);
    if (i) out << ' ';
    out << fmt(p.first) << ',' << fmt(p.second);
  }
  out << "\"/>\n";
}

void emit_diagonal(std::ostringstream& out, const Canvas& canvas, double x_from, double x_to,
                   double y) {
  Point a = canvas.map({x_from, y});
  Point b = canvas.map({x_to, y});
  out << "<line class=\"diagonal\" x1=\"" << fmt(a.first) << "\" y1=\"" << fmt(a.second)
      << "\" x2=\"" << fmt(b.first) << "\" y2=\"" << fmt(b.second)
      << "\" stroke-dasharray=\"6 4\"/>\n";
}

std::string document(const Canvas& canvas, const SvgStyle& style, const std::string& body) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << fmt(canvas.width()) << "\" height=\"" << fmt(canvas.height()) << "\" viewBox=\"0 0 "
      << fmt(canvas.width()) << " " << fmt(canvas.height()) << "\">\n"
      << "<g stroke=\"" << style.stroke << "\" stroke-width=\"" << fmt(style.stroke_width)
      << "\" stroke-linejoin=\"round\">\n"
      << body << "</g>\n</svg>\n";
  return out.str();
}

std::vector<Point> lozenge_outline(const Lozenge& loz, int upper_rows) {
  std::array<Point, 3> a = cell_corners(loz.up, upper_rows);
  std::array<Point, 3> b = cell_corners(loz.down, upper_rows);
  std::vector<Point> pts(a.begin(), a.end());
  for (const Point& p : b)
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  if (pts.size() != 4) throw std::logic_error("lozenge halves are not edge-adjacent");
  double cx = 0, cy = 0;
  for (const Point& p : pts) {
    cx += p.first;
    cy += p.second;
  }
  cx /= 4;
  cy /= 4;
  std::sort(pts.begin(), pts.end(), [&](const Point& p, const Point& q) {
    return std::atan2(p.second - cy, p.first - cx) < std::atan2(q.second - cy, q.first - cx);
  });
  return pts;
}

}  // namespace

std::string region_to_svg(const Region& region, const SvgStyle& style) {
  const int m = region.upper_rows();
  std::vector<TriangleCell> cells = region.cells();
  std::vector<TriangleCell> dents;
  for (int p : region.dents_up())
    dents.push_back({HalfPlane::upper, m, p, CellKind::up});
  for (int p : region.dents_down())
    dents.push_back({HalfPlane::lower, 1, p, CellKind::down});

  Canvas canvas;
  canvas.scale = style.scale;
  canvas.margin = style.margin;
  for (const TriangleCell& c : cells)
    for (const Point& p : cell_corners(c, m)) canvas.bounds.add(p);
  if (style.dents_white)
    for (const TriangleCell& c : dents)
      for (const Point& p : cell_corners(c, m)) canvas.bounds.add(p);
  const double diag_y = m * kRowHeight;
  if (style.show_diagonal) {
    canvas.bounds.add({0.0, diag_y});
    canvas.bounds.add({static_cast<double>(region.diag_len()), diag_y});
  }

  std::ostringstream body;
  for (const TriangleCell& c : cells) {
    auto corners = cell_corners(c, m);
    emit_polygon(body, canvas, {corners.begin(), corners.end()}, "cell",
                 c.kind == CellKind::up ? style.cell_up : style.cell_down);
  }
  if (style.dents_white)
    for (const TriangleCell& c : dents) {
      auto corners = cell_corners(c, m);
      emit_polygon(body, canvas, {corners.begin(), corners.end()}, "dent", style.dent);
    }
  if (style.show_diagonal)
    emit_diagonal(body, canvas, 0.0, region.diag_len(), diag_y);
  return document(canvas, style, body.str());
}

std::string tiling_to_svg(const Tiling& tiling, const SvgStyle& style) {
  int m = 0;
  for (const Lozenge& loz : tiling.lozenges)
    if (loz.up.half == HalfPlane::upper) m = std::max(m, loz.up.row);

  Canvas canvas;
  canvas.scale = style.scale;
  canvas.margin = style.margin;
  std::vector<std::vector<Point>> outlines;
  outlines.reserve(tiling.lozenges.size());
  for (const Lozenge& loz : tiling.lozenges) {
    outlines.push_back(lozenge_outline(loz, m));
    for (const Point& p : outlines.back()) canvas.bounds.add(p);
  }

  std::ostringstream body;
  for (size_t i = 0; i < tiling.lozenges.size(); ++i) {
    const Lozenge& loz = tiling.lozenges[i];
    const char* cls = "lozenge vertical";
    const std::string* fill = &style.vertical;
    switch (loz.kind()) {
      case LozengeKind::vertical:
        break;
      case LozengeKind::left_tilted:
        cls = "lozenge left";
        fill = &style.left_tilted;
        break;
      case LozengeKind::right_tilted:
        cls = "lozenge right";
        fill = &style.right_tilted;
        break;
    }
    emit_polygon(body, canvas, outlines[i], cls, *fill);
  }
  if (style.show_diagonal && canvas.bounds.any)
    emit_diagonal(body, canvas, canvas.bounds.min_x, canvas.bounds.max_x, m * kRowHeight);
  return document(canvas, style, body.str());
}

}  // namespace lozenge
