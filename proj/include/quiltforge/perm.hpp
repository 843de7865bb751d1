#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace quiltforge {

// Raised for malformed input: bad cycle notation, non-involutions, size
// mismatches and other violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Points are 0-based internally; every textual form (cycle notation, JSON)
// is 1-based.
using Point = std::uint32_t;

// A bijection on {0..n-1}.
//
// Composition is left to right: p.then(q) applies p first and q second.
// The same convention is used for word evaluation, so
// evaluate_word(t, u + v) == evaluate_word(t, u).then(evaluate_word(t, v)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> image);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return image_.size(); }
  Point operator()(Point p) const { return image_[p]; }
  std::span<const Point> images() const { return image_; }

  Permutation then(const Permutation& next) const;
  Permutation inverse() const;

  // Relabels the points by sigma: the result maps sigma(i) to sigma(p(i)).
  // For a 2-cycle (i j) this is the cycle (sigma(i) sigma(j)).
  Permutation relabeled(const Permutation& sigma) const;

  bool is_identity() const;
  bool is_involution() const;
  std::size_t fixed_point_count() const;
  std::size_t transposition_count() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<Point> image_;
};

// Parses whitespace-insensitive disjoint cycle notation such as "(1 2)(3 4)".
// "" and "()" are the identity. Points are 1-based.
Permutation parse_cycles(std::string_view text, std::size_t n);

// Inverse of parse_cycles; fixed points are omitted, identity prints "()".
std::string format_cycles(const Permutation& p);

enum class Generator : std::uint8_t { a = 0, b = 1, c = 2 };

char generator_name(Generator g);

// A word over {a, b, c}. No inverses are needed since every generator is an
// involution.
struct GeneratorWord {
  std::vector<Generator> letters;

  static GeneratorWord parse(std::string_view text);
  std::string str() const;
  std::size_t size() const { return letters.size(); }
  bool operator==(const GeneratorWord&) const = default;
};

// A permutation of the generator roles: new generator k is old generator
// roles[k].
using RolePermutation = std::array<int, 3>;

// All six role permutations, identity first.
const std::array<RolePermutation, 6>& all_role_permutations();

// Three involutions on the same n points.
class InvolutionTriple {
 public:
  InvolutionTriple() = default;
  InvolutionTriple(Permutation a, Permutation b, Permutation c);

  static InvolutionTriple parse(std::string_view a, std::string_view b, std::string_view c,
                                std::size_t n);

  std::size_t n() const { return gens_[0].size(); }
  const Permutation& a() const { return gens_[0]; }
  const Permutation& b() const { return gens_[1]; }
  const Permutation& c() const { return gens_[2]; }
  const Permutation& operator[](Generator g) const { return gens_[static_cast<int>(g)]; }
  const Permutation& gen(int k) const { return gens_[k]; }
  const std::array<Permutation, 3>& generators() const { return gens_; }

  // Conjugates every generator by sigma (a point relabeling).
  InvolutionTriple relabeled(const Permutation& sigma) const;
  InvolutionTriple with_roles(const RolePermutation& roles) const;

  // Product a.b.c under the left-to-right convention.
  Permutation product() const;

  auto operator<=>(const InvolutionTriple&) const = default;

 private:
  std::array<Permutation, 3> gens_;
};

Permutation evaluate_word(const InvolutionTriple& t, const GeneratorWord& w);

// Orbits of <a,b,c>, each sorted, ordered by smallest member.
std::vector<std::vector<Point>> orbit_partition(const InvolutionTriple& t);
bool is_transitive(const InvolutionTriple& t);

struct CanonicalForm {
  InvolutionTriple triple;
  Permutation relabeling;  // triple == input.relabeled(relabeling)
};

// Canonical representative of the conjugacy class of t under point
// relabeling.
//
// Each orbit is relabeled by a breadth-first traversal (generators visited in
// the order a, b, c) from every possible start point; the lexicographically
// smallest image sequence (a, then b, then c) wins. Orbits are then laid out
// largest first, ties broken by that sequence. Two triples share a canonical
// form exactly when they are conjugate, and the canonical form of a
// canonical triple is itself with the identity relabeling.
CanonicalForm canonicalize(const InvolutionTriple& t);

// Compact string encoding of the image sequences, usable as a map key.
std::string encode(const InvolutionTriple& t);

// Encoding of the canonical form.
std::string canonical_key(const InvolutionTriple& t);

// Number of 2-cycles over all three generators; equals n - 1 for a transitive
// triple exactly when the gluing graph is a tree.
std::size_t glued_pair_count(const InvolutionTriple& t);

}  // namespace quiltforge
