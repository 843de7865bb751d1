#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quiltforge/perm.hpp"
#include "quiltforge/quilt.hpp"
#include "quiltforge/rational.hpp"

namespace quiltforge {

// GF(q) for a prime q < 64, or q in {4, 8, 9}. Elements are 0..q-1; for
// extension fields the base-p digits of an element are its polynomial
// coefficients (lowest degree first), which fixes a deterministic ordering.
class FiniteField {
 public:
  explicit FiniteField(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }

  int add(int x, int y) const { return add_[x * q_ + y]; }
  int mul(int x, int y) const { return mul_[x * q_ + y]; }
  int neg(int x) const { return neg_[x]; }
  int inv(int x) const;
  // x -> x^p
  int frobenius(int x) const { return frob_[x]; }

 private:
  int q_;
  int p_;
  std::vector<int> add_, mul_, neg_, inv_, frob_;
};

using FieldVector = std::vector<int>;
using FieldMatrix = std::vector<std::vector<int>>;

struct ProjectiveSpace {
  int dim = 0;
  int q = 0;
  FiniteField field{2};
  std::vector<FieldVector> points;       // first nonzero coordinate is 1
  std::vector<FieldVector> hyperplanes;  // dual vectors, same normalization
  // incidence[h][p] == 1 iff point p lies on hyperplane h. As a matrix it
  // intertwines the point action (left) with the hyperplane action (right).
  std::vector<std::vector<std::uint8_t>> incidence;

  std::size_t size() const { return points.size(); }
  RationalMatrix incidence_matrix() const;
};

ProjectiveSpace build_projective_space(int dim, int q);

// A collineation x -> M * frobenius^k(x) and its action on points and
// hyperplanes.
struct GroupElementAction {
  FieldMatrix matrix;
  int frobenius_power = 0;
  Permutation point_perm;
  Permutation hyperplane_perm;
};

GroupElementAction collineation_actions(const ProjectiveSpace& s, const FieldMatrix& m,
                                        int frobenius_power = 0);

// Involutory collineations, one per distinct point permutation, in matrix
// enumeration order. Semilinear ones are included when requested.
std::vector<GroupElementAction> involutory_collineations(const ProjectiveSpace& s,
                                                         bool include_semilinear = false);

// Transplantable (point action, hyperplane action) pairs generated by
// triples of involutory collineations, one per pair class, sorted by
// pair_class_key.
std::vector<TriplePair> projective_seed_search(const ProjectiveSpace& s,
                                               bool include_semilinear = false);

// PSL(2,11) acting on the cosets of two non-conjugate subgroups of order 60.
struct CosetActions {
  std::size_t group_order = 0;
  std::size_t subgroup_order = 0;
  std::size_t degree = 0;
  bool subgroups_conjugate = true;
  // For every involution of the group: its permutation on the cosets of the
  // first and of the second subgroup.
  std::vector<Permutation> first;
  std::vector<Permutation> second;
};

CosetActions psl2_coset_actions();

// Transplantable pairs of degree 11 from involution triples, one per class,
// sorted by pair_class_key.
std::vector<TriplePair> psl2_seed_search(const CosetActions& actions);

// Exhaustive search over transitive involution triples on n points, up to
// conjugacy; returns one pair per transplantable pair class, sorted by key.
// Refuses n > 8 unless allow_large is set.
std::vector<TriplePair> brute_force_pairs(std::size_t n, bool allow_large = false);

// All involutions (including the identity) on n points, in lexicographic
// order of image sequences.
std::vector<Permutation> all_involutions(std::size_t n);

// Groups pairs into the quilts they generate (unnamed), ordered by the
// smallest class key of each quilt.
std::vector<Quilt> quilts_of(const std::vector<TriplePair>& pairs,
                             std::uint64_t rng_seed = kDefaultRngSeed);

// A quilt seed with its catalog name.
struct NamedSeed {
  std::string quilt_name;
  TriplePair pair;
  std::size_t class_count = 0;
};

struct SeedReport {
  std::vector<NamedSeed> seeds;
  std::vector<std::string> warnings;
};

// Builds one seed per catalog quilt for the requested sizes (subset of
// 7, 11, 13, 15, 21). Candidate pairs come from the projective and PSL(2,11)
// searches and are grouped into quilts:
//   7   PG(2,2), every quilt
//   13  PG(2,3), every quilt; the larger is 13a, the smaller 13b
//   15  PG(3,2), the quilts whose diagrams are treelike
//   11  PSL(2,11), every quilt; 11g and 11i are the ones with 6 and 5
//       classes, 11f and 11h the two with 4, ordered by seed key
//   21  PG(2,4) with semilinear involutions, the quilts generated by three
//       involutions fixing 7 points each
// Each seed is the member of its quilt with the smallest class key. Quilts
// found but not selected are reported as warnings.
SeedReport catalog_seeds(const std::vector<int>& sizes);

}  // namespace quiltforge
