#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "quiltforge/surface.hpp"

namespace quiltforge {

// A cell of the triangular lattice. Lattice point (i, j) sits at
// (i + j/2, j * sqrt(3)/2). The up cell (i, j) has corners (i, j), (i+1, j),
// (i, j+1); the down cell has (i+1, j), (i, j+1), (i+1, j+1). Lattice points
// are colored (i + 2j) mod 3, and a triangle's corner of type k always sits
// on a point of color k, so every placed triangle has its neighbor across
// the edge of color x fixed by the lattice.
struct LatticeCell {
  int i = 0;
  int j = 0;
  bool up = true;

  auto operator<=>(const LatticeCell&) const = default;
};

LatticeCell lattice_neighbor(const LatticeCell& cell, Generator x);

// The three corners of a cell as lattice points, indexed by corner type.
std::array<std::array<int, 2>, 3> cell_corners(const LatticeCell& cell);

struct CutEdge {
  Point first = 0;   // first < second
  Point second = 0;
  Generator color = Generator::a;
};

struct Layout {
  std::vector<LatticeCell> placement;  // per triangle
  std::vector<CutEdge> cuts;           // gluings not realized by adjacency
  // Set when no layout with at most one cut per color was found within the
  // node budget.
  bool best_effort = false;
  std::size_t nodes = 0;
};

inline constexpr std::size_t kDefaultLayoutBudget = 1'000'000;

// Backtracking over placements grown from triangle 0 at the up cell (0, 0):
// the lowest unplaced triangle glued to a placed one is put next to it. Among
// complete layouts the fewest cuts win, then the fewest sides shared by
// triangles not glued along them, then the smallest bounding box.
Layout layout_diagram(const GluingDiagram& d, std::size_t node_budget = kDefaultLayoutBudget);

enum class StrokeStyle { dotted, dashed, solid };

const char* to_string(StrokeStyle s);
StrokeStyle parse_stroke_style(const std::string& text);

struct StyleConfig {
  std::array<StrokeStyle, 3> stroke{StrokeStyle::dotted, StrokeStyle::dashed, StrokeStyle::solid};
  std::string fixed_color = "red";
  double fixed_width_factor = 3.0;
  double line_width = 1.5;
  double scale = 40.0;  // pixels per unit edge

  // Throws unless the three colors use three distinct styles and the
  // numeric fields are positive with fixed_width_factor > 1.
  void validate() const;
};

// SVG 1.1 document. Realized gluings are drawn once as thin styled black
// lines, each cut gluing as a styled stub on both of its triangles, and
// mirror edges as thick lines in the fixed color.
std::string emit_svg(const Layout& l, const GluingDiagram& d, const StyleConfig& s = {},
                     const std::string& title = "");

}  // namespace quiltforge
