#include <doctest.h>

#include <algorithm>

#include "quiltforge/seeds.hpp"
#include "quiltforge/surface.hpp"
#include "support.hpp"

using namespace quiltforge;
using qf_test::T;

namespace {

CornerAngles with_denominators(std::size_t ab, std::size_t bc, std::size_t ca) {
  CornerAngles a;
  a.denominator = {ab, bc, ca};
  return a;
}

}  // namespace

TEST_SUITE("surface") {

TEST_CASE("diagrams") {
  auto one = build_diagram(T("", "", "", 1));
  CHECK(one.n == 1);
  CHECK(one.glued_edge_count() == 0);
  CHECK(one.mirror_edge_count() == 3);

  auto two = build_diagram(T("(1 2)", "", "", 2));
  CHECK(two.glued_edge_count() == 1);
  CHECK(two.mirror_edge_count() == 4);
  CHECK(two.partner[0][0] == 1);
  CHECK(two.is_mirror(Generator::b, 0));
  CHECK(two.triple() == T("(1 2)", "", "", 2));
  CHECK(is_treelike(two));
  CHECK_FALSE(is_treelike(build_diagram(T("(1 2)", "(2 3)", "(1 3)", 3))));
  CHECK_THROWS_AS(build_diagram(T("(1 2)", "", "", 3)), Error);
}

TEST_CASE("disk and sphere") {
  auto disk = glue_surface(build_diagram(T("", "", "", 1)));
  CHECK(disk.euler_characteristic == 1);
  CHECK(disk.orientable);
  REQUIRE(disk.vertices.size() == 3);
  for (const auto& v : disk.vertices) {
    CHECK_FALSE(v.interior);
    CHECK(v.degree() == 1);
  }
  CHECK(disk.boundaries.size() == 1);

  auto sphere = glue_surface(build_diagram(T("(1 2)", "(1 2)", "(1 2)", 2)));
  CHECK(sphere.euler_characteristic == 2);
  CHECK(sphere.orientable);
  REQUIRE(sphere.vertices.size() == 3);
  for (const auto& v : sphere.vertices) {
    CHECK(v.interior);
    CHECK(v.degree() == 2);
  }
  CHECK(sphere.boundaries.empty());
  auto angles = assign_angles(sphere);
  for (auto d : angles.denominator) CHECK(d == 2);
  CHECK_FALSE(angles.hyperbolic());
}

TEST_CASE("an odd cycle of gluings is nonorientable") {
  auto d = build_diagram(T("(1 2)", "(2 3)", "(1 3)", 3));
  auto s = glue_surface(d);
  CHECK_FALSE(s.orientable);
  CHECK_FALSE(orientable_by_cycle_parity(d));
}

TEST_CASE("orientability agrees with the cycle-parity test") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    auto t = qf_test::random_transitive_triple(1 + rng() % 10, rng);
    auto d = build_diagram(t);
    auto s = glue_surface(d);
    CHECK(s.orientable == orientable_by_cycle_parity(d));
    // every triangle corner belongs to exactly one vertex
    std::size_t corners = 0;
    for (const auto& v : s.vertices) corners += v.degree();
    CHECK(corners == 3 * t.n());
    if (is_treelike(d)) {
      CHECK(s.euler_characteristic == 1);
      CHECK(s.orientable);
    }
    // V - E + F with E counting glued and mirror edges
    CHECK(s.euler_characteristic ==
          static_cast<long>(s.vertices.size()) -
              static_cast<long>(d.glued_edge_count() + d.mirror_edge_count()) +
              static_cast<long>(t.n()));
  }
}

TEST_CASE("orientation double cover") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    auto t = qf_test::random_transitive_triple(1 + rng() % 8, rng);
    auto cover = orientation_double_cover(t);
    CHECK(cover.n() == 2 * t.n());
    auto d = build_diagram(t);
    bool orientable = glue_surface(d).orientable;
    CHECK(is_transitive(cover) == !orientable);
    // the cover of an orientable diagram is two copies; a cover is orientable
    // on every component
    if (!orientable) {
      auto s = glue_surface(build_diagram(cover));
      CHECK(s.orientable);
      CHECK(s.euler_characteristic == 2 * glue_surface(d).euler_characteristic);
    }
  }
}

TEST_CASE("lcm rule") {
  // Six triangles around an interior ab vertex (degree 6) and a boundary ab
  // vertex with two corners: M_ab = lcm(6, 2 * 2) = 12.
  auto t = T("(1 2)(3 4)(5 6)(7 8)", "(2 3)(4 5)(1 6)", "(1 7)", 8);
  auto s = glue_surface(build_diagram(t));
  bool interior6 = false, boundary2 = false;
  for (const auto& v : s.vertices)
    if (v.type == CornerType::ab) {
      interior6 |= v.interior && v.degree() == 6;
      boundary2 |= !v.interior && v.degree() == 2;
    }
  REQUIRE(interior6);
  REQUIRE(boundary2);
  auto angles = assign_angles(s);
  CHECK(angles.denominator[0] == 12);
  CHECK(angles.angle(CornerType::ab) == Rational(1, 12));
}

TEST_CASE("angle assignment is consistent around every vertex") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    auto t = qf_test::random_transitive_triple(1 + rng() % 10, rng);
    auto s = glue_surface(build_diagram(t));
    auto angles = assign_angles(s);
    for (const auto& v : s.vertices) {
      Rational total = angles.angle(v.type) * static_cast<long>(v.degree());
      Rational full = v.interior ? Rational(1) : Rational(1, 2);
      // the cone or corner order is an integer
      Rational order = full / total;
      CHECK(order.get_den() == 1);
    }
  }
}

TEST_CASE("orbifold symbols") {
  auto disk = glue_surface(build_diagram(T("", "", "", 1)));
  auto smooth = conway_signature(disk, assign_angles(disk));
  CHECK(smooth.symbol == "*");
  CHECK(smooth.corner_count() == 0);

  auto corners = conway_signature(disk, with_denominators(4, 6, 14));
  REQUIRE(corners.boundaries.size() == 1);
  auto b = corners.boundaries[0];
  std::sort(b.begin(), b.end());
  CHECK(b == std::vector<std::size_t>{2, 3, 7});
  CHECK(corners.corner_count() == 3);
  CHECK((corners.symbol == "*237" || corners.symbol == "*273" || corners.symbol == "*372" ||
         corners.symbol == "*327" || corners.symbol == "*723" || corners.symbol == "*732"));
  CHECK(corners.hyperbolic);

  auto sphere = glue_surface(build_diagram(T("(1 2)", "(1 2)", "(1 2)", 2)));
  auto cones = conway_signature(sphere, with_denominators(4, 6, 14));
  CHECK(cones.symbol == "732");
  CHECK(cones.cone_points == std::vector<std::size_t>{7, 3, 2});
  auto big = conway_signature(sphere, with_denominators(24, 6, 4));
  CHECK(big.symbol == "(12)32");

  auto odd = conway_signature(T("(1 2)", "(2 3)", "(1 3)", 3));
  CHECK(odd.cross_caps == 1);
  CHECK(odd.handles == 0);
  CHECK(odd.symbol.find("×") != std::string::npos);
}

TEST_CASE("isometry by role permutation") {
  auto t = T("(1 2)", "(2 3)", "", 3);
  CHECK(isometric_by_generator_permutation({t, t.with_roles({1, 0, 2})}));
  CHECK(isometric_by_generator_permutation({t, t}));
  CHECK_FALSE(isometric_by_generator_permutation({t, T("(1 2)", "(1 2)", "(2 3)", 3)}));
}

TEST_CASE("quilt 7 signatures") {
  auto seed = projective_seed_search(build_projective_space(2, 2)).front();
  Quilt q = enumerate_quilt(seed, "7");
  bool hexagon = false;
  for (const auto& c : q.classes) {
    auto l = conway_signature(c.representative.first);
    auto r = conway_signature(c.representative.second);
    CHECK(l.hyperbolic);
    CHECK(l.angles.denominator == r.angles.denominator);
    CHECK(is_treelike(build_diagram(c.representative.first)));
    CHECK(isometric_by_generator_permutation(c.representative) ==
          isometric_by_generator_permutation({c.representative.second, c.representative.first}));
    if (isometric_by_generator_permutation(c.representative) && l.corner_count() == 6 &&
        r.corner_count() == 6)
      hexagon = true;
  }
  CHECK(hexagon);
}

}  // TEST_SUITE
