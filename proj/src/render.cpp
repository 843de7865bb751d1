#include "quiltforge/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <optional>

namespace quiltforge {

std::array<std::array<int, 2>, 3> cell_corners(const LatticeCell& c) {
  std::array<std::array<int, 2>, 3> pts =
      c.up ? std::array<std::array<int, 2>, 3>{{{c.i, c.j}, {c.i + 1, c.j}, {c.i, c.j + 1}}}
           : std::array<std::array<int, 2>, 3>{{{c.i + 1, c.j}, {c.i, c.j + 1}, {c.i + 1, c.j + 1}}};
  std::array<std::array<int, 2>, 3> by_type;
  for (const auto& p : pts) by_type[((p[0] + 2 * p[1]) % 3 + 3) % 3] = p;
  return by_type;
}

LatticeCell lattice_neighbor(const LatticeCell& c, Generator x) {
  // Reflect across the side opposite the corner of type x + 1.
  auto opposite = cell_corners(c)[(static_cast<int>(x) + 1) % 3];
  int di = opposite[0] - c.i, dj = opposite[1] - c.j;
  if (c.up) {
    if (di == 0 && dj == 0) return {c.i, c.j, false};
    if (di == 1) return {c.i - 1, c.j, false};
    return {c.i, c.j - 1, false};
  }
  if (di == 1 && dj == 1) return {c.i, c.j, true};
  if (di == 1) return {c.i, c.j + 1, true};
  return {c.i + 1, c.j, true};
}

namespace {

// Cuts first, then sides shared by triangles that are not glued there, then
// bounding box area.
struct Score {
  std::size_t cuts = std::numeric_limits<std::size_t>::max();
  std::size_t touching = 0;
  double area = std::numeric_limits<double>::infinity();

  bool operator<(const Score& o) const {
    if (cuts != o.cuts) return cuts < o.cuts;
    if (touching != o.touching) return touching < o.touching;
    return area < o.area - 1e-9;
  }
};

double bounding_area(const std::vector<LatticeCell>& cells) {
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (const auto& c : cells)
    for (const auto& p : cell_corners(c)) {
      double x = p[0] + 0.5 * p[1], y = p[1] * std::sqrt(3.0) / 2;
      x0 = std::min(x0, x), x1 = std::max(x1, x);
      y0 = std::min(y0, y), y1 = std::max(y1, y);
    }
  return (x1 - x0) * (y1 - y0);
}

class LayoutSearch {
 public:
  LayoutSearch(const GluingDiagram& d, std::size_t budget, bool strict)
      : d_(d), budget_(budget), strict_(strict), cell_(d.n) {}

  std::optional<std::vector<LatticeCell>> run() {
    place(0, {0, 0, true});
    return best_;
  }
  std::size_t nodes() const { return nodes_; }

 private:
  Point partner(int x, Point t) const { return d_.partner[x][t]; }

  void place(Point t, const LatticeCell& c) {
    if (aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    // Check t at c against the placed triangles.
    std::array<int, 3> added{0, 0, 0};
    std::size_t touching = 0;
    for (int y = 0; y < 3; ++y) {
      Point s = partner(y, t);
      auto it = occupied_.find(lattice_neighbor(c, static_cast<Generator>(y)));
      if (it != occupied_.end() && it->second != s) ++touching;
      if (s != t && cell_[s] && *cell_[s] != lattice_neighbor(c, static_cast<Generator>(y)))
        ++added[y];
    }
    std::size_t total = cuts_[0] + cuts_[1] + cuts_[2] + added[0] + added[1] + added[2];
    for (int y = 0; y < 3; ++y)
      if (strict_ && cuts_[y] + added[y] > 1) return;
    if (total > score_.cuts) return;

    cell_[t] = c;
    occupied_[c] = t;
    touching_ += touching;
    for (int y = 0; y < 3; ++y) cuts_[y] += added[y];
    ++placed_;

    if (placed_ == d_.n) {
      std::vector<LatticeCell> cells;
      for (const auto& x : cell_) cells.push_back(*x);
      Score s{total, touching_, bounding_area(cells)};
      if (s < score_) {
        score_ = s;
        best_ = std::move(cells);
      }
    } else {
      Point next = 0;
      bool found = false;
      for (Point u = 0; u < d_.n && !found; ++u) {
        if (cell_[u]) continue;
        for (int y = 0; y < 3; ++y)
          if (partner(y, u) != u && cell_[partner(y, u)]) {
            next = u;
            found = true;
            break;
          }
      }
      // Candidate cells by (placed partner, color).
      std::vector<std::pair<std::pair<Point, int>, LatticeCell>> options;
      for (int y = 0; y < 3; ++y) {
        Point s = partner(y, next);
        if (s == next || !cell_[s]) continue;
        options.push_back({{s, y}, lattice_neighbor(*cell_[s], static_cast<Generator>(y))});
      }
      std::sort(options.begin(), options.end());
      std::vector<LatticeCell> tried;
      for (const auto& [key, cell] : options) {
        if (occupied_.count(cell) || std::find(tried.begin(), tried.end(), cell) != tried.end())
          continue;
        tried.push_back(cell);
        place(next, cell);
      }
    }

    --placed_;
    touching_ -= touching;
    for (int y = 0; y < 3; ++y) cuts_[y] -= added[y];
    occupied_.erase(c);
    cell_[t].reset();
  }

  const GluingDiagram& d_;
  std::size_t budget_;
  bool strict_;
  std::size_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<std::optional<LatticeCell>> cell_;
  std::map<LatticeCell, Point> occupied_;
  std::array<std::size_t, 3> cuts_{0, 0, 0};
  std::size_t placed_ = 0;
  std::size_t touching_ = 0;
  Score score_;
  std::optional<std::vector<LatticeCell>> best_;
};

}  // namespace

Layout layout_diagram(const GluingDiagram& d, std::size_t node_budget) {
  if (d.n == 0) throw Error("cannot lay out an empty diagram");
  Layout l;
  LayoutSearch strict(d, node_budget, true);
  auto cells = strict.run();
  l.nodes = strict.nodes();
  if (!cells) {
    l.best_effort = true;
    LayoutSearch relaxed(d, node_budget, false);
    cells = relaxed.run();
    l.nodes += relaxed.nodes();
  }
  if (!cells) {
    // Every triangle on its own, every gluing cut.
    cells.emplace();
    for (Point t = 0; t < d.n; ++t) cells->push_back({3 * static_cast<int>(t), 0, true});
  }
  l.placement = std::move(*cells);
  for (int x = 0; x < 3; ++x)
    for (Point i = 0; i < d.n; ++i) {
      Point j = d.partner[x][i];
      if (j <= i) continue;
      if (lattice_neighbor(l.placement[i], static_cast<Generator>(x)) != l.placement[j])
        l.cuts.push_back({i, j, static_cast<Generator>(x)});
    }
  return l;
}

const char* to_string(StrokeStyle s) {
  switch (s) {
    case StrokeStyle::dotted: return "dotted";
    case StrokeStyle::dashed: return "dashed";
    case StrokeStyle::solid: return "solid";
  }
  return "?";
}

StrokeStyle parse_stroke_style(const std::string& text) {
  if (text == "dotted") return StrokeStyle::dotted;
  if (text == "dashed") return StrokeStyle::dashed;
  if (text == "solid") return StrokeStyle::solid;
  throw Error("unknown stroke style '" + text + "'");
}

void StyleConfig::validate() const {
  if (stroke[0] == stroke[1] || stroke[1] == stroke[2] || stroke[0] == stroke[2])
    throw Error("the three edge colors need three distinct stroke styles");
  if (!(fixed_width_factor > 1)) throw Error("fixed edges must be drawn thicker than gluings");
  if (!(line_width > 0) || !(scale > 0)) throw Error("line width and scale must be positive");
  if (fixed_color.empty()) throw Error("fixed edge color is empty");
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string dash_attributes(StrokeStyle s, double width) {
  switch (s) {
    case StrokeStyle::dotted:
      return " stroke-dasharray=\"" + num(0.1) + " " + num(3 * width) +
             "\" stroke-linecap=\"round\"";
    case StrokeStyle::dashed:
      return " stroke-dasharray=\"" + num(6 * width) + " " + num(4 * width) + "\"";
    case StrokeStyle::solid: return "";
  }
  return "";
}

}  // namespace

std::string emit_svg(const Layout& l, const GluingDiagram& d, const StyleConfig& s,
                     const std::string& title) {
  s.validate();
  if (l.placement.size() != d.n) throw Error("layout does not cover the diagram");

  const double root3 = std::sqrt(3.0);
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (const auto& c : l.placement)
    for (const auto& p : cell_corners(c)) {
      double x = p[0] + 0.5 * p[1], y = p[1] * root3 / 2;
      x0 = std::min(x0, x), x1 = std::max(x1, x);
      y0 = std::min(y0, y), y1 = std::max(y1, y);
    }
  const double margin = s.line_width * s.fixed_width_factor + 4;
  auto px = [&](const std::array<int, 2>& p) {
    double x = (p[0] + 0.5 * p[1] - x0) * s.scale + margin;
    double y = (y1 - p[1] * root3 / 2) * s.scale + margin;
    return std::make_pair(x, y);
  };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         num((x1 - x0) * s.scale + 2 * margin) + "\" height=\"" +
         num((y1 - y0) * s.scale + 2 * margin) + "\">\n";
  if (!title.empty()) out += "<title>" + title + "</title>\n";

  for (Point t = 0; t < d.n; ++t) {
    auto corners = cell_corners(l.placement[t]);
    out += "<polygon class=\"triangle\" data-index=\"" + std::to_string(t + 1) + "\" points=\"";
    for (int k = 0; k < 3; ++k) {
      auto [x, y] = px(corners[k]);
      out += (k ? " " : "") + num(x) + "," + num(y);
    }
    out += "\" fill=\"#f4f4f4\" stroke=\"none\"/>\n";
  }

  auto is_cut = [&](Point i, int x) {
    for (const auto& c : l.cuts)
      if (static_cast<int>(c.color) == x && (c.first == i || c.second == i)) return true;
    return false;
  };
  for (Point t = 0; t < d.n; ++t) {
    auto corners = cell_corners(l.placement[t]);
    for (int x = 0; x < 3; ++x) {
      // Edge x joins corners x - 1 and x.
      auto [ax, ay] = px(corners[(x + 2) % 3]);
      auto [bx, by] = px(corners[x]);
      std::string coords = " x1=\"" + num(ax) + "\" y1=\"" + num(ay) + "\" x2=\"" + num(bx) +
                           "\" y2=\"" + num(by) + "\"";
      std::string color(1, generator_name(static_cast<Generator>(x)));
      Point p = d.partner[x][t];
      if (p == t) {
        out += "<line class=\"mirror " + color + "\"" + coords + " stroke=\"" + s.fixed_color +
               "\" stroke-width=\"" + num(s.line_width * s.fixed_width_factor) +
               "\" stroke-linecap=\"round\"/>\n";
        continue;
      }
      bool cut = is_cut(t, x);
      if (!cut && p < t) continue;  // realized gluing, drawn from the lower index
      out += "<line class=\"" + std::string(cut ? "cut " : "glued ") + color + "\"" + coords +
             " stroke=\"black\" stroke-width=\"" + num(s.line_width) + "\"" +
             dash_attributes(s.stroke[x], s.line_width) + "/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace quiltforge
