#include <doctest.h>

#include <map>
#include <set>

#include "quiltforge/quilt.hpp"
#include "quiltforge/seeds.hpp"
#include "support.hpp"

using namespace quiltforge;
using qf_test::T;

namespace {

constexpr BraidMove kMoves[] = {BraidMove::L, BraidMove::Linv, BraidMove::R, BraidMove::Rinv};

TriplePair pg22_seed() { return projective_seed_search(build_projective_space(2, 2)).front(); }

std::set<std::string> keys(const Quilt& q) {
  std::set<std::string> out;
  for (const auto& c : q.classes) out.insert(c.key);
  return out;
}

// The pair class modulo everything pair_class_key forgets, by brute force.
std::string brute_pair_key(const TriplePair& p, const std::vector<Permutation>& perms) {
  auto canon = [&](const InvolutionTriple& t) {
    std::string best;
    for (const auto& s : perms) {
      std::string e = encode(t.relabeled(s));
      if (best.empty() || e < best) best = e;
    }
    return best;
  };
  std::string best;
  for (const auto& roles : all_role_permutations()) {
    std::string x = canon(p.first.with_roles(roles)), y = canon(p.second.with_roles(roles));
    std::string k = std::min(x, y) + "|" + std::max(x, y);
    if (best.empty() || k < best) best = k;
  }
  return best;
}

}  // namespace

TEST_SUITE("quilt") {

TEST_CASE("braid moves by hand") {
  auto t = T("(1 2)", "(2 3)", "(1 3)", 3);
  CHECK(braid(t, BraidMove::L) == T("(1 3)", "(1 2)", "(1 3)", 3));
  CHECK(braid(t, BraidMove::R) == T("(1 2)", "(1 3)", "(1 2)", 3));
  auto same = T("(1 2)(3 4)", "(1 2)(3 4)", "(2 3)", 4);
  CHECK(braid(same, BraidMove::L) == same);
}

TEST_CASE("moves are mutually inverse and preserve invariants") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t n = 1 + rng() % 10;
    auto t = qf_test::random_triple(n, rng);
    CHECK(braid(braid(t, BraidMove::L), BraidMove::Linv) == t);
    CHECK(braid(braid(t, BraidMove::Linv), BraidMove::L) == t);
    CHECK(braid(braid(t, BraidMove::R), BraidMove::Rinv) == t);
    CHECK(braid(braid(t, BraidMove::Rinv), BraidMove::R) == t);
    for (auto m : kMoves) {
      auto u = braid(t, m);
      CHECK(u.product() == t.product());
      CHECK(is_transitive(u) == is_transitive(t));
    }
  }
}

TEST_CASE("braid_pair") {
  auto t = T("(1 2)", "(2 3)", "(1 3)", 3);
  for (auto m : kMoves) {
    auto p = braid_pair({t, t}, m);
    CHECK(p.first == braid(t, m));
    CHECK(p.second == braid(t, m));
  }
  auto seed = pg22_seed();
  CHECK(braid_pair(braid_pair(seed, BraidMove::L), BraidMove::Linv) == seed);
  auto moved = braid_pair(seed, BraidMove::L);
  CHECK(check_transplantable(moved.first, moved.second).kind == Verdict::Kind::transplantable);
}

TEST_CASE("pair_class_key invariances") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + rng() % 7;
    TriplePair p{qf_test::random_triple(n, rng), qf_test::random_triple(n, rng)};
    std::string k = pair_class_key(p);
    CHECK(k == pair_class_key({p.second, p.first}));
    auto roles = all_role_permutations()[rng() % 6];
    CHECK(k == pair_class_key({p.first.with_roles(roles), p.second.with_roles(roles)}));
    CHECK(k == pair_class_key({p.first.relabeled(qf_test::random_permutation(n, rng)),
                               p.second.relabeled(qf_test::random_permutation(n, rng))}));
  }
}

TEST_CASE("pair_class_key agrees with exhaustive identification at n = 3") {
  auto perms = qf_test::all_permutations(3);
  std::vector<Permutation> invs;
  for (const auto& p : perms)
    if (p.is_involution()) invs.push_back(p);
  std::vector<InvolutionTriple> ts;
  for (const auto& a : invs)
    for (const auto& b : invs)
      for (const auto& c : invs) ts.emplace_back(a, b, c);
  std::mt19937_64 rng(33);
  std::map<std::string, std::string> fast_to_brute, brute_to_fast;
  for (int trial = 0; trial < 1500; ++trial) {
    TriplePair p{ts[rng() % ts.size()], ts[rng() % ts.size()]};
    std::string fast = pair_class_key(p), brute = brute_pair_key(p, perms);
    CHECK(fast_to_brute.emplace(fast, brute).first->second == brute);
    CHECK(brute_to_fast.emplace(brute, fast).first->second == fast);
  }
  CHECK(fast_to_brute.size() > 20);
}

TEST_CASE("quilt 7") {
  auto seed = pg22_seed();
  Quilt q = enumerate_quilt(seed, "7");
  REQUIRE(q.size() == 3);
  CHECK(q.seed().key == pair_class_key(seed));
  for (const auto& c : q.classes) {
    REQUIRE(c.certificate);
    CHECK(intertwines(c.certificate->intertwiner(), c.representative.first,
                      c.representative.second));
    CHECK(c.key == pair_class_key(c.representative));
    for (auto m : kMoves) CHECK(keys(q).count(pair_class_key(braid_pair(c.representative, m))));
  }
  CHECK(keys(q).size() == 3);

  Quilt again = enumerate_quilt(seed, "7");
  for (std::size_t i = 0; i < q.size(); ++i) CHECK(again.classes[i].key == q.classes[i].key);
  Quilt from_moved = enumerate_quilt(braid_pair(seed, BraidMove::L), "7");
  CHECK(keys(from_moved) == keys(q));

  CHECK(label(q, 1) == "7(1)");
  CHECK(label(q, 3) == "7(3)");
  CHECK_THROWS_AS(label(q, 4), Error);
  CHECK_THROWS_AS(label(q, 0), Error);
  CHECK_THROWS_AS(enumerate_quilt(seed, "7", 2), Error);
}

TEST_CASE("labels") {
  Quilt q{"13a", std::vector<PairClass>(5)};
  CHECK(label(q, 5) == "13a(5)");
  Quilt g{"11g", std::vector<PairClass>(6)};
  CHECK_THROWS_AS(label(g, 7), Error);
}

}  // TEST_SUITE
