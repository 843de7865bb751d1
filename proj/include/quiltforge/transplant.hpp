#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quiltforge/perm.hpp"
#include "quiltforge/rational.hpp"

namespace quiltforge {

inline constexpr std::uint64_t kDefaultRngSeed = 0x5EED;

// Basis of { T : T P_x(left) = P_x(right) T for x in a, b, c }, from exact
// elimination on the 3n^2 homogeneous equations in the n^2 entries of T.
std::vector<RationalMatrix> intertwiner_basis(const InvolutionTriple& left,
                                              const InvolutionTriple& right);

// An invertible element of span(basis), or nullopt.
//
// Search order: small integer combinations (coefficients in -3..3, by
// increasing L1 norm, ties broken lexicographically with the value ranking
// 1, -1, 2, -2, 3, -3, 0 so unit vectors come first in basis order), then 64
// seeded random combinations, then det(A + tB) evaluated at n + 1 points on
// each of 8 random lines. A nullopt after all three means the determinant
// vanishes identically on every sampled line.
std::optional<RationalMatrix> find_invertible_intertwiner(
    const std::vector<RationalMatrix>& basis, std::uint64_t rng_seed = kDefaultRngSeed);

// Bounded search for an invertible intertwiner with all entries in {0, 1}
// among 0/1 combinations of the basis. Only attempted when the basis has at
// most max_basis elements.
std::optional<RationalMatrix> find_binary_intertwiner(const std::vector<RationalMatrix>& basis,
                                                      std::size_t max_basis = 16);

// sigma with left[x].relabeled(sigma) == right[x] for all three generators,
// or nullopt. Complete backtracking over orbit start images.
std::optional<Permutation> find_permutation_isomorphism(const InvolutionTriple& left,
                                                        const InvolutionTriple& right);

// Fixed-point counts of rho(w) over reduced words (no letter repeated
// consecutively) of length 0..max_len, ordered by length then
// lexicographically.
struct Fingerprint {
  std::size_t max_len = 0;
  std::vector<std::uint32_t> counts;
  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const InvolutionTriple& t, std::size_t max_len);

// The reduced words enumerated by fingerprint(), in the same order.
std::vector<GeneratorWord> reduced_words(std::size_t max_len);

// First word whose fixed-point counts differ, if any.
std::optional<GeneratorWord> distinguishing_word(const InvolutionTriple& left,
                                                 const InvolutionTriple& right,
                                                 std::size_t max_len);

// Two triples with a verified invertible intertwiner and no permutation
// isomorphism. The constructor re-checks every certificate.
class TransplantablePair {
 public:
  TransplantablePair(InvolutionTriple left, InvolutionTriple right, RationalMatrix intertwiner);

  const InvolutionTriple& left() const { return left_; }
  const InvolutionTriple& right() const { return right_; }
  const RationalMatrix& intertwiner() const { return intertwiner_; }
  bool nonisomorphic() const { return true; }

 private:
  InvolutionTriple left_;
  InvolutionTriple right_;
  RationalMatrix intertwiner_;
};

// True iff T P_x(left) == P_x(right) T for all three generators, exactly.
bool intertwines(const RationalMatrix& t, const InvolutionTriple& left,
                 const InvolutionTriple& right);

struct Verdict {
  enum class Kind { transplantable, isomorphic, inequivalent };
  Kind kind;
  std::optional<TransplantablePair> pair;    // transplantable
  std::optional<Permutation> isomorphism;    // isomorphic
  std::optional<GeneratorWord> witness;      // inequivalent, when a word separates them
};

const char* to_string(Verdict::Kind kind);

// Fingerprint filter (length 6), then exact intertwiner, then isomorphism
// search. Both triples must be transitive on the same number of points.
Verdict check_transplantable(const InvolutionTriple& left, const InvolutionTriple& right,
                             std::uint64_t rng_seed = kDefaultRngSeed);

}  // namespace quiltforge
