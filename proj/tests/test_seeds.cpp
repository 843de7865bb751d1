#include <doctest.h>

#include <set>

#include "quiltforge/seeds.hpp"

using namespace quiltforge;

namespace {

std::set<std::string> keys(const Quilt& q) {
  std::set<std::string> out;
  for (const auto& c : q.classes) out.insert(c.key);
  return out;
}

}  // namespace

TEST_SUITE("seeds") {

TEST_CASE("finite fields") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11}) {
    FiniteField f(q);
    for (int x = 0; x < q; ++x) {
      CHECK(f.add(x, f.neg(x)) == 0);
      CHECK(f.mul(x, 1) == x);
      if (x) CHECK(f.mul(x, f.inv(x)) == 1);
      for (int y = 0; y < q; ++y) {
        CHECK(f.frobenius(f.mul(x, y)) == f.mul(f.frobenius(x), f.frobenius(y)));
        CHECK(f.frobenius(f.add(x, y)) == f.add(f.frobenius(x), f.frobenius(y)));
      }
    }
  }
  CHECK_THROWS_AS(FiniteField(6), Error);
}

TEST_CASE("projective spaces") {
  struct Case { int d, q; std::size_t points, per; };
  for (auto c : {Case{2, 2, 7, 3}, Case{2, 3, 13, 4}, Case{2, 4, 21, 5}, Case{3, 2, 15, 7}}) {
    auto s = build_projective_space(c.d, c.q);
    CHECK(s.points.size() == c.points);
    CHECK(s.hyperplanes.size() == c.points);
    for (const auto& row : s.incidence) {
      std::size_t on = 0;
      for (auto x : row) on += x;
      CHECK(on == c.per);
    }
    CHECK(determinant(s.incidence_matrix()) != 0);
  }
  // A A^T = 2I + J has eigenvalues 9 and 2 (six times), so det(A)^2 = 576.
  CHECK(abs(determinant(build_projective_space(2, 2).incidence_matrix())) == 24);
}

TEST_CASE("collineations preserve incidence") {
  auto s = build_projective_space(2, 2);
  auto id = collineation_actions(s, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(id.point_perm.is_identity());
  CHECK(id.hyperplane_perm.is_identity());
  auto invs = involutory_collineations(s);
  CHECK(invs.size() == 21);  // the 21 involutions of GL(3,2)
  for (const auto& g : invs) {
    CHECK(g.point_perm.is_involution());
    CHECK(g.hyperplane_perm.is_involution());
    CHECK_FALSE(g.point_perm.is_identity());
    for (std::size_t h = 0; h < s.size(); ++h)
      for (std::size_t p = 0; p < s.size(); ++p)
        CHECK(s.incidence[h][p] == s.incidence[g.hyperplane_perm(h)][g.point_perm(p)]);
  }
  CHECK(involutory_collineations(build_projective_space(2, 4), true).size() == 675);
}

TEST_CASE("PG(2,2) seeds and the brute-force oracle") {
  auto pairs = projective_seed_search(build_projective_space(2, 2));
  REQUIRE_FALSE(pairs.empty());
  for (const auto& p : pairs) {
    CHECK(p.first.n() == 7);
    CHECK(check_transplantable(p.first, p.second).kind == Verdict::Kind::transplantable);
  }
  auto quilts = quilts_of(pairs);
  REQUIRE(quilts.size() == 1);
  CHECK(quilts[0].size() == 3);

  CHECK(brute_force_pairs(2).empty());
  CHECK(brute_force_pairs(3).empty());
  CHECK(brute_force_pairs(4).empty());
  CHECK_THROWS_AS(brute_force_pairs(9), Error);
}

TEST_CASE("PSL(2,11) coset actions") {
  auto a = psl2_coset_actions();
  CHECK(a.group_order == 660);
  CHECK(a.subgroup_order == 60);
  CHECK(a.degree == 11);
  CHECK_FALSE(a.subgroups_conjugate);
  CHECK(a.first.size() == 55);  // involutions of PSL(2,11)
  for (std::size_t i = 0; i < a.first.size(); ++i) {
    CHECK(a.first[i].is_involution());
    CHECK(a.first[i].fixed_point_count() == a.second[i].fixed_point_count());
  }
}

TEST_CASE("involution enumeration") {
  // 1, 2, 4, 10, 26, 76 involutions (telephone numbers)
  std::size_t expect[] = {1, 1, 2, 4, 10, 26, 76};
  for (std::size_t n = 1; n <= 6; ++n) CHECK(all_involutions(n).size() == expect[n]);
}

TEST_CASE("catalog seeds for 7 and 13") {
  SeedReport r = catalog_seeds({7, 13});
  REQUIRE(r.seeds.size() == 3);
  CHECK(r.seeds[0].quilt_name == "7");
  CHECK(r.seeds[1].quilt_name == "13a");
  CHECK(r.seeds[2].quilt_name == "13b");
  CHECK(r.seeds[0].class_count == 3);
  CHECK(r.seeds[1].class_count == 5);
  CHECK(r.seeds[2].class_count == 4);
  for (const auto& s : r.seeds) {
    Quilt q = enumerate_quilt(s.pair, s.quilt_name);
    CHECK(q.size() == s.class_count);
    // the seed is the member with the smallest key
    CHECK(*keys(q).begin() == pair_class_key(s.pair));
  }
  CHECK_THROWS_AS(catalog_seeds({8}), Error);
}

}  // TEST_SUITE
