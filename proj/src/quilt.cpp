#include "quiltforge/quilt.hpp"

#include <functional>
#include <set>

namespace quiltforge {

const char* to_string(BraidMove m) {
  switch (m) {
    case BraidMove::L: return "L";
    case BraidMove::Linv: return "Linv";
    case BraidMove::R: return "R";
    case BraidMove::Rinv: return "Rinv";
  }
  return "?";
}

InvolutionTriple braid(const InvolutionTriple& t, BraidMove m) {
  const Permutation& a = t.a();
  const Permutation& b = t.b();
  const Permutation& c = t.c();
  switch (m) {
    case BraidMove::L: return InvolutionTriple(b.relabeled(a), a, c);
    case BraidMove::Linv: return InvolutionTriple(b, a.relabeled(b), c);
    case BraidMove::R: return InvolutionTriple(a, c, b.relabeled(c));
    case BraidMove::Rinv: return InvolutionTriple(a, c.relabeled(b), b);
  }
  throw Error("unknown braid move");
}

TriplePair braid_pair(const TriplePair& p, BraidMove m) {
  if (p.first.n() != p.second.n()) throw Error("pair members act on different point counts");
  return {braid(p.first, m), braid(p.second, m)};
}

std::string pair_class_key(const TriplePair& p) {
  if (p.first.n() != p.second.n()) throw Error("pair members act on different point counts");
  std::string best;
  bool have = false;
  for (const auto& roles : all_role_permutations()) {
    std::string l = canonical_key(p.first.with_roles(roles));
    std::string r = canonical_key(p.second.with_roles(roles));
    std::string key = l < r ? l + r : r + l;
    if (!have || key < best) {
      best = std::move(key);
      have = true;
    }
  }
  return best;
}

Quilt enumerate_quilt(const TriplePair& seed, const std::string& name, std::size_t max_classes,
                      std::uint64_t rng_seed) {
  Verdict v = check_transplantable(seed.first, seed.second, rng_seed);
  if (v.kind != Verdict::Kind::transplantable)
    throw Error(std::string("quilt seed is not transplantable (") + to_string(v.kind) + ")");

  Quilt q;
  q.name = name;
  std::set<std::string> seen;

  auto record = [&](const TriplePair& p) {
    TriplePair rep{canonicalize(p.first).triple, canonicalize(p.second).triple};
    PairClass cls{rep, pair_class_key(rep), std::nullopt};
    seen.insert(cls.key);
    q.classes.push_back(std::move(cls));
    if (q.classes.size() > max_classes)
      throw Error("quilt " + name + " exceeds " + std::to_string(max_classes) + " classes");
  };

  static constexpr BraidMove kOrder[] = {BraidMove::L, BraidMove::R, BraidMove::Linv,
                                         BraidMove::Rinv};
  std::function<void(TriplePair)> visit = [&](TriplePair p) {
    for (BraidMove m : kOrder) {
      TriplePair next = braid_pair(p, m);
      if (seen.count(pair_class_key(next))) continue;
      record(next);
      visit(q.classes.back().representative);
    }
  };

  record(seed);
  visit(q.classes.front().representative);

  for (auto& cls : q.classes) {
    Verdict cv = check_transplantable(cls.representative.first, cls.representative.second,
                                      rng_seed);
    if (cv.kind != Verdict::Kind::transplantable)
      throw Error("quilt " + name + " contains a class that is not transplantable");
    cls.certificate = std::move(cv.pair);
  }
  return q;
}

std::string label(const Quilt& q, std::size_t index) {
  if (index < 1 || index > q.classes.size())
    throw Error("quilt " + q.name + " has " + std::to_string(q.classes.size()) +
                " classes; index " + std::to_string(index) + " is out of range");
  return q.name + "(" + std::to_string(index) + ")";
}

}  // namespace quiltforge
