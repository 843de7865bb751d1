#include "quiltforge/surface.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "quiltforge/transplant.hpp"

namespace quiltforge {

const char* to_string(CornerType k) {
  switch (k) {
    case CornerType::ab: return "ab";
    case CornerType::bc: return "bc";
    case CornerType::ca: return "ca";
  }
  return "?";
}

std::array<Generator, 2> corner_colors(CornerType k) {
  int x = static_cast<int>(k);
  return {static_cast<Generator>(x), static_cast<Generator>((x + 1) % 3)};
}

std::size_t GluingDiagram::glued_edge_count() const {
  std::size_t count = 0;
  for (const auto& p : partner)
    for (std::size_t i = 0; i < n; ++i) count += p[i] > i;
  return count;
}

std::size_t GluingDiagram::mirror_edge_count() const {
  std::size_t count = 0;
  for (const auto& p : partner)
    for (std::size_t i = 0; i < n; ++i) count += p[i] == i;
  return count;
}

InvolutionTriple GluingDiagram::triple() const {
  return InvolutionTriple(Permutation(partner[0]), Permutation(partner[1]),
                          Permutation(partner[2]));
}

GluingDiagram build_diagram(const InvolutionTriple& t) {
  if (!is_transitive(t)) throw Error("gluing diagram needs a transitive triple");
  GluingDiagram d;
  d.n = t.n();
  for (int x = 0; x < 3; ++x) {
    auto images = t.gen(x).images();
    d.partner[x].assign(images.begin(), images.end());
  }
  return d;
}

bool is_treelike(const GluingDiagram& d) {
  if (d.glued_edge_count() + 1 != d.n) return false;
  // n - 1 edges: a tree iff connected.
  std::vector<bool> seen(d.n, false);
  std::vector<Point> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Point i = stack.back();
    stack.pop_back();
    for (const auto& p : d.partner)
      if (!seen[p[i]]) {
        seen[p[i]] = true;
        ++reached;
        stack.push_back(p[i]);
      }
  }
  return reached == d.n;
}

namespace {

struct Walk {
  std::vector<Point> triangles;
  bool closed = false;
  Generator mirror = Generator::a;  // color of the mirror edge that stopped the walk
};

// Alternately crosses edges of colors `first` and `second`, starting at
// `start`, until a mirror edge is hit or the walk closes up.
Walk alternating_walk(const GluingDiagram& d, Point start, Generator first, Generator second) {
  Walk w;
  w.triangles.push_back(start);
  Point cur = start;
  Generator col = first;
  for (;;) {
    Point next = d.partner[static_cast<int>(col)][cur];
    if (next == cur) {
      w.mirror = col;
      return w;
    }
    cur = next;
    col = col == first ? second : first;
    if (cur == start && col == first) {
      w.closed = true;
      return w;
    }
    w.triangles.push_back(cur);
  }
}

}  // namespace

GluedSurface glue_surface(const GluingDiagram& d) {
  GluedSurface s;
  s.diagram = d;
  for (int k = 0; k < 3; ++k) {
    s.vertex_of[k].assign(d.n, SIZE_MAX);
    auto [x, y] = corner_colors(static_cast<CornerType>(k));
    for (Point i = 0; i < d.n; ++i) {
      if (s.vertex_of[k][i] != SIZE_MAX) continue;
      SurfaceVertex v;
      v.type = static_cast<CornerType>(k);
      Walk w = alternating_walk(d, i, x, y);
      if (w.closed) {
        v.interior = true;
        v.corners = std::move(w.triangles);
      } else {
        Point end = w.triangles.back();
        Generator other = w.mirror == x ? y : x;
        v.corners = alternating_walk(d, end, other, w.mirror).triangles;
      }
      for (Point c : v.corners) s.vertex_of[k][c] = s.vertices.size();
      s.vertices.push_back(std::move(v));
    }
  }

  s.euler_characteristic = static_cast<long>(s.vertices.size()) -
                           static_cast<long>(d.glued_edge_count() + d.mirror_edge_count()) +
                           static_cast<long>(d.n);

  // Two-color the faces: a gluing reverses the labeled orientation.
  std::vector<int> side(d.n, -1);
  s.orientable = true;
  for (Point root = 0; root < d.n; ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    std::vector<Point> stack{root};
    while (!stack.empty()) {
      Point i = stack.back();
      stack.pop_back();
      for (const auto& p : d.partner) {
        Point j = p[i];
        if (j == i) continue;
        if (side[j] < 0) {
          side[j] = 1 - side[i];
          stack.push_back(j);
        } else if (side[j] == side[i]) {
          s.orientable = false;
        }
      }
    }
  }

  // Boundary components. A dart is a mirror edge (triangle, color); from the
  // least unvisited dart we head towards the corner of the same type as the
  // edge color and follow the boundary until the start dart comes back.
  std::vector<std::array<bool, 3>> visited(d.n, {false, false, false});
  for (Point i0 = 0; i0 < d.n; ++i0) {
    for (int x0 = 0; x0 < 3; ++x0) {
      if (!d.is_mirror(static_cast<Generator>(x0), i0) || visited[i0][x0]) continue;
      std::vector<std::size_t> component;
      Point i = i0;
      int x = x0;
      int k = x0;
      do {
        visited[i][x] = true;
        auto colors = corner_colors(static_cast<CornerType>(k));
        Generator y = static_cast<int>(colors[0]) == x ? colors[1] : colors[0];
        Generator xg = static_cast<Generator>(x);
        Walk w = alternating_walk(d, i, y, xg);
        component.push_back(s.vertex_of[k][i]);
        i = w.triangles.back();
        x = static_cast<int>(w.mirror);
        // The edge of color x joins corners x - 1 and x; leave through the
        // one we did not arrive at.
        k = k == x ? (x + 2) % 3 : x;
      } while (!(i == i0 && x == x0 && k == x0));
      s.boundaries.push_back(std::move(component));
    }
  }
  return s;
}

bool orientable_by_cycle_parity(const GluingDiagram& d) {
  // Union-find carrying the parity of each point relative to its root.
  std::vector<Point> parent(d.n);
  std::vector<int> parity(d.n, 0);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Point i) {
    int par = 0;
    while (parent[i] != i) {
      par ^= parity[i];
      i = parent[i];
    }
    return std::make_pair(i, par);
  };
  for (const auto& p : d.partner) {
    for (Point i = 0; i < d.n; ++i) {
      Point j = p[i];
      if (j <= i) continue;
      auto [ri, pi] = find(i);
      auto [rj, pj] = find(j);
      if (ri == rj) {
        if (pi == pj) return false;  // odd cycle
      } else {
        parent[rj] = ri;
        parity[rj] = pi ^ pj ^ 1;
      }
    }
  }
  return true;
}

bool CornerAngles::hyperbolic() const {
  Rational sum = 0;
  for (std::size_t m : denominator) sum += Rational(1, m);
  return sum < Rational(1, 2);
}

CornerAngles assign_angles(const GluedSurface& s) {
  CornerAngles a;
  for (const auto& v : s.vertices) {
    std::size_t need = v.interior ? v.degree() : 2 * v.degree();
    auto& m = a.denominator[static_cast<int>(v.type)];
    m = std::lcm(m, need);
  }
  return a;
}

std::size_t OrbifoldSignature::corner_count() const {
  std::size_t count = 0;
  for (const auto& b : boundaries) count += b.size();
  return count;
}

namespace {

std::string order_text(std::size_t m) {
  return m < 10 ? std::to_string(m) : "(" + std::to_string(m) + ")";
}

}  // namespace

OrbifoldSignature conway_signature(const GluedSurface& s, const CornerAngles& angles) {
  OrbifoldSignature sig;
  sig.angles = angles;
  sig.hyperbolic = angles.hyperbolic();
  for (const auto& v : s.vertices) {
    if (!v.interior) continue;
    std::size_t order = angles.denominator[static_cast<int>(v.type)] / v.degree();
    if (order >= 2) sig.cone_points.push_back(order);
  }
  std::sort(sig.cone_points.rbegin(), sig.cone_points.rend());
  for (const auto& boundary : s.boundaries) {
    std::vector<std::size_t> corners;
    for (std::size_t vi : boundary) {
      const auto& v = s.vertices[vi];
      std::size_t order = angles.denominator[static_cast<int>(v.type)] / (2 * v.degree());
      if (order >= 2) corners.push_back(order);
    }
    sig.boundaries.push_back(std::move(corners));
  }

  long b = static_cast<long>(s.boundaries.size());
  long deficit = 2 - b - s.euler_characteristic;
  if (s.orientable)
    sig.handles = static_cast<std::size_t>(deficit / 2);
  else
    sig.cross_caps = static_cast<std::size_t>(deficit);

  for (std::size_t m : sig.cone_points) sig.symbol += order_text(m);
  for (const auto& corners : sig.boundaries) {
    sig.symbol += "*";
    for (std::size_t m : corners) sig.symbol += order_text(m);
  }
  for (std::size_t i = 0; i < sig.cross_caps; ++i) sig.symbol += "×";
  for (std::size_t i = 0; i < sig.handles; ++i) sig.symbol += "∘";
  return sig;
}

OrbifoldSignature conway_signature(const InvolutionTriple& t) {
  GluedSurface s = glue_surface(build_diagram(t));
  return conway_signature(s, assign_angles(s));
}

bool isometric_by_generator_permutation(const TriplePair& p) {
  if (p.first.n() != p.second.n()) throw Error("pair members act on different point counts");
  for (const auto& roles : all_role_permutations())
    if (find_permutation_isomorphism(p.first.with_roles(roles), p.second)) return true;
  return false;
}

InvolutionTriple orientation_double_cover(const InvolutionTriple& t) {
  const std::size_t n = t.n();
  std::array<std::vector<Point>, 3> images;
  for (int x = 0; x < 3; ++x) {
    images[x].resize(2 * n);
    for (Point i = 0; i < n; ++i) {
      Point j = t.gen(x)(i);
      for (Point sheet = 0; sheet < 2; ++sheet)
        images[x][2 * i + sheet] = j == i ? 2 * i + sheet : 2 * j + (1 - sheet);
    }
  }
  return InvolutionTriple(Permutation(images[0]), Permutation(images[1]), Permutation(images[2]));
}

}  // namespace quiltforge
