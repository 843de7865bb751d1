#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "quiltforge/perm.hpp"
#include "quiltforge/quilt.hpp"
#include "quiltforge/rational.hpp"

namespace quiltforge {

// Each triangle has one corner of each type. Corner type k sits between the
// edges of colors k and k+1 (mod 3), so edge a joins corners ca and ab,
// edge b joins ab and bc, edge c joins bc and ca.
enum class CornerType : std::uint8_t { ab = 0, bc = 1, ca = 2 };

const char* to_string(CornerType k);

// The two edge colors meeting at a corner type.
std::array<Generator, 2> corner_colors(CornerType k);

struct GluingDiagram {
  std::size_t n = 0;
  // partner[x][i] is the triangle glued to i along its x-edge, or i itself
  // when that edge is a mirror.
  std::array<std::vector<Point>, 3> partner;

  bool is_mirror(Generator x, Point i) const {
    return partner[static_cast<int>(x)][i] == i;
  }
  std::size_t glued_edge_count() const;
  std::size_t mirror_edge_count() const;
  InvolutionTriple triple() const;
};

GluingDiagram build_diagram(const InvolutionTriple& t);

// The multigraph with one edge per glued pairing is a tree.
bool is_treelike(const GluingDiagram& d);

struct SurfaceVertex {
  CornerType type = CornerType::ab;
  // Triangles around the vertex in chain order; for a boundary vertex the
  // chain runs from one mirror edge to the other.
  std::vector<Point> corners;
  bool interior = false;

  std::size_t degree() const { return corners.size(); }
};

struct GluedSurface {
  GluingDiagram diagram;
  std::vector<SurfaceVertex> vertices;  // by corner type, then smallest triangle
  std::vector<std::size_t> vertex_of[3];  // vertex_of[k][i]: vertex of corner k of triangle i
  long euler_characteristic = 0;
  bool orientable = false;
  // Boundary components as cyclic sequences of vertex indices.
  std::vector<std::vector<std::size_t>> boundaries;
};

GluedSurface glue_surface(const GluingDiagram& d);

// Independent orientability test: every cycle of a spanning-forest basis of
// the gluing graph has even length.
bool orientable_by_cycle_parity(const GluingDiagram& d);

// Corner angles tau / M_k with M_k the lcm of the degrees of the interior
// vertices of type k and twice the degrees of its boundary vertices.
struct CornerAngles {
  std::array<std::size_t, 3> denominator{1, 1, 1};

  Rational angle(CornerType k) const { return Rational(1, denominator[static_cast<int>(k)]); }
  // Angle sum below tau/2.
  bool hyperbolic() const;
};

CornerAngles assign_angles(const GluedSurface& s);

struct OrbifoldSignature {
  CornerAngles angles;
  std::vector<std::size_t> cone_points;               // descending, orders >= 2
  std::vector<std::vector<std::size_t>> boundaries;   // corner orders >= 2, cyclic order
  std::size_t handles = 0;
  std::size_t cross_caps = 0;
  bool hyperbolic = false;
  std::string symbol;

  std::size_t corner_count() const;
};

// Orbifold symbol: cone orders descending, then "*" and the corner orders of
// each boundary, then one "×" per cross-cap, then one "∘" per handle. Orders
// of 10 or more are written in parentheses.
OrbifoldSignature conway_signature(const GluedSurface& s, const CornerAngles& angles);
OrbifoldSignature conway_signature(const InvolutionTriple& t);

// Some permutation of the generator roles makes the members permutation
// isomorphic.
bool isometric_by_generator_permutation(const TriplePair& p);

// Two sheets per triangle (triangle i, sheet s is point 2i + s); gluings
// switch sheets and mirrors stay mirrors. The deck transformation swaps the
// sheets of every triangle.
InvolutionTriple orientation_double_cover(const InvolutionTriple& t);

}  // namespace quiltforge
