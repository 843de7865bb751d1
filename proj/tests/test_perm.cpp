#include <doctest.h>

#include <map>
#include <set>

#include "quiltforge/perm.hpp"
#include "support.hpp"

using namespace quiltforge;
using qf_test::T;

namespace {

// Smallest encoding over all n! relabelings: a canonical form by brute force.
std::string brute_canonical(const InvolutionTriple& t,
                            const std::vector<Permutation>& perms) {
  std::string best;
  for (const auto& s : perms) {
    std::string e = encode(t.relabeled(s));
    if (best.empty() || e < best) best = e;
  }
  return best;
}

std::vector<InvolutionTriple> all_triples(std::size_t n) {
  auto invs = std::vector<Permutation>{};
  for (const auto& p : qf_test::all_permutations(n))
    if (p.is_involution()) invs.push_back(p);
  std::vector<InvolutionTriple> out;
  for (const auto& a : invs)
    for (const auto& b : invs)
      for (const auto& c : invs) out.emplace_back(a, b, c);
  return out;
}

}  // namespace

TEST_SUITE("perm") {

TEST_CASE("parse_cycles") {
  CHECK(parse_cycles("(1 2)", 3).images()[0] == 1);
  CHECK(parse_cycles("(1 2)", 3) == Permutation({1, 0, 2}));
  CHECK(parse_cycles("", 5).is_identity());
  CHECK(parse_cycles("()", 5).is_identity());
  CHECK(parse_cycles(" ( 1  3 )( 2 4 ) ", 4) == Permutation({2, 3, 0, 1}));
  CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)", 3), Error);
  CHECK_THROWS_AS(parse_cycles("(1 4)", 3), Error);
  CHECK_THROWS_AS(parse_cycles("(0 1)", 3), Error);
  CHECK_THROWS_AS(parse_cycles("(1 2", 3), Error);
  CHECK_THROWS_AS(parse_cycles("1 2", 3), Error);
}

TEST_CASE("format round trip") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + rng() % 12;
    Permutation p = qf_test::random_permutation(n, rng);
    CHECK(parse_cycles(format_cycles(p), n) == p);
  }
  CHECK(format_cycles(Permutation::identity(3)) == "()");
  CHECK(format_cycles(parse_cycles("(3 1)", 3)) == "(1 3)");
}

TEST_CASE("triples reject non-involutions and size mismatches") {
  CHECK_THROWS_AS(T("(1 2 3)", "", "", 3), Error);
  CHECK_THROWS_AS(InvolutionTriple(Permutation::identity(2), Permutation::identity(3),
                                   Permutation::identity(2)),
                  Error);
}

TEST_CASE("evaluate_word") {
  auto t = T("(1 2)", "", "", 2);
  CHECK(evaluate_word(t, GeneratorWord::parse("ab")) == parse_cycles("(1 2)", 2));
  CHECK(evaluate_word(t, GeneratorWord::parse("aa")).is_identity());
  CHECK(evaluate_word(t, GeneratorWord::parse("")).is_identity());

  // a then b then c: 1->2->3->1, 2->1->1->3, 3->3->2->2.
  auto u = T("(1 2)", "(2 3)", "(1 3)", 3);
  CHECK(evaluate_word(u, GeneratorWord::parse("abc")) == parse_cycles("(2 3)", 3));
  CHECK(u.product() == parse_cycles("(2 3)", 3));
  CHECK_THROWS_AS(GeneratorWord::parse("abd"), Error);
}

TEST_CASE("evaluate_word is a homomorphism") {
  std::mt19937_64 rng(2);
  const char letters[] = "abc";
  for (int trial = 0; trial < 200; ++trial) {
    auto t = qf_test::random_triple(1 + rng() % 9, rng);
    std::string u, v;
    for (std::size_t k = rng() % 7; k > 0; --k) u += letters[rng() % 3];
    for (std::size_t k = rng() % 7; k > 0; --k) v += letters[rng() % 3];
    CHECK(evaluate_word(t, GeneratorWord::parse(u + v)) ==
          evaluate_word(t, GeneratorWord::parse(u)).then(evaluate_word(t, GeneratorWord::parse(v))));
  }
}

TEST_CASE("orbit_partition") {
  using P = std::vector<std::vector<Point>>;
  CHECK(orbit_partition(T("", "", "", 3)) == P{{0}, {1}, {2}});
  CHECK(orbit_partition(T("(1 2)", "(2 3)", "", 3)) == P{{0, 1, 2}});
  CHECK(orbit_partition(T("(1 2)", "(1 2)", "(3 4)", 4)) == P{{0, 1}, {2, 3}});
  CHECK(is_transitive(T("(1 2)", "(2 3)", "", 3)));
  CHECK_FALSE(is_transitive(T("(1 2)", "(1 2)", "(3 4)", 4)));
}

TEST_CASE("relabeled moves cycle entries") {
  auto a = parse_cycles("(2 3)", 3);
  auto sigma = parse_cycles("(1 2 3)", 3);  // 1->2->3->1
  CHECK(a.relabeled(sigma) == parse_cycles("(3 1)", 3));
}

TEST_CASE("canonicalize examples") {
  auto t = T("(2 3)", "", "", 3);
  CanonicalForm f = canonicalize(t);
  CHECK(f.triple == T("(1 2)", "", "", 3));
  CHECK(t.relabeled(f.relabeling) == f.triple);
  std::set<Point> image{f.relabeling(1), f.relabeling(2)};
  CHECK(image == std::set<Point>{0, 1});

  CanonicalForm g = canonicalize(f.triple);
  CHECK(g.triple == f.triple);
  CHECK(g.relabeling.is_identity());
}

TEST_CASE("canonical form agrees with the n! oracle, exhaustively for n <= 4") {
  for (std::size_t n : {1u, 2u, 3u, 4u}) {
    auto perms = qf_test::all_permutations(n);
    std::map<std::string, std::string> fast_to_brute, brute_to_fast;
    for (const auto& t : all_triples(n)) {
      std::string fast = canonical_key(t), brute = brute_canonical(t, perms);
      auto [i, fresh_i] = fast_to_brute.emplace(fast, brute);
      auto [j, fresh_j] = brute_to_fast.emplace(brute, fast);
      CHECK(i->second == brute);
      CHECK(j->second == fast);
      CHECK(t.relabeled(canonicalize(t).relabeling) == canonicalize(t).triple);
    }
  }
}

TEST_CASE("canonical form agrees with the n! oracle on random triples, n = 5, 6") {
  std::mt19937_64 rng(3);
  for (std::size_t n : {5u, 6u}) {
    auto perms = qf_test::all_permutations(n);
    std::vector<InvolutionTriple> ts;
    for (int k = 0; k < 60; ++k) {
      auto t = qf_test::random_triple(n, rng);
      ts.push_back(t);
      ts.push_back(t.relabeled(qf_test::random_permutation(n, rng)));
    }
    std::vector<std::string> brute;
    for (const auto& t : ts) brute.push_back(brute_canonical(t, perms));
    for (std::size_t i = 0; i < ts.size(); ++i)
      for (std::size_t j = i + 1; j < ts.size(); ++j)
        CHECK((canonical_key(ts[i]) == canonical_key(ts[j])) == (brute[i] == brute[j]));
  }
}

TEST_CASE("canonical form is constant on conjugacy classes") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + rng() % 8;
    auto t = qf_test::random_triple(n, rng);
    auto s = qf_test::random_permutation(n, rng);
    CHECK(canonicalize(t).triple == canonicalize(t.relabeled(s)).triple);
  }
}

TEST_CASE("role permutations") {
  CHECK(all_role_permutations().size() == 6);
  CHECK(all_role_permutations()[0] == RolePermutation{0, 1, 2});
  auto t = T("(1 2)", "(2 3)", "", 3);
  auto u = t.with_roles({1, 0, 2});
  CHECK(u.a() == t.b());
  CHECK(u.b() == t.a());
}

TEST_CASE("glued_pair_count") {
  CHECK(glued_pair_count(T("(1 2)", "(2 3)", "", 3)) == 2);
  CHECK(glued_pair_count(T("(1 2)(3 4)", "(1 2)", "", 4)) == 3);
}

}  // TEST_SUITE
