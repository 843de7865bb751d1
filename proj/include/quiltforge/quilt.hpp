#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quiltforge/perm.hpp"
#include "quiltforge/transplant.hpp"

namespace quiltforge {

enum class BraidMove { L, Linv, R, Rinv };

const char* to_string(BraidMove m);

// L: (a,b,c) -> (aba, a, c)      Linv: (a,b,c) -> (b, bab, c)
// R: (a,b,c) -> (a, c, cbc)      Rinv: (a,b,c) -> (a, bcb, b)
// Conjugating b by a relabels the entries of b's cycles by a.
InvolutionTriple braid(const InvolutionTriple& t, BraidMove m);

using TriplePair = std::pair<InvolutionTriple, InvolutionTriple>;

TriplePair braid_pair(const TriplePair& p, BraidMove m);

// Canonical key of a pair modulo independent point relabeling of each member,
// reversal of the pair, and simultaneous permutation of the generator roles.
std::string pair_class_key(const TriplePair& p);

struct PairClass {
  TriplePair representative;  // as discovered, each member canonically relabeled
  std::string key;
  std::optional<TransplantablePair> certificate;
};

struct Quilt {
  std::string name;
  std::vector<PairClass> classes;  // discovery order

  const PairClass& seed() const { return classes.front(); }
  std::size_t size() const { return classes.size(); }
};

inline constexpr std::size_t kDefaultMaxClasses = 64;

// Depth-first closure of the seed's class under the moves L, R, Linv, Rinv
// (tried in that order), numbering classes by first discovery. Every class is
// certified with check_transplantable.
Quilt enumerate_quilt(const TriplePair& seed, const std::string& name,
                      std::size_t max_classes = kDefaultMaxClasses,
                      std::uint64_t rng_seed = kDefaultRngSeed);

// "name(i)" for 1 <= i <= number of classes.
std::string label(const Quilt& q, std::size_t index);

}  // namespace quiltforge
