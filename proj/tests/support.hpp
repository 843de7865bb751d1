#pragma once

#include <algorithm>
#include <numeric>
#include <random>

#include "quiltforge/perm.hpp"

namespace qf_test {

using quiltforge::InvolutionTriple;
using quiltforge::Permutation;
using quiltforge::Point;

inline Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

// Random involution: pair off a random number of points.
inline Permutation random_involution(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> pts(n);
  std::iota(pts.begin(), pts.end(), Point{0});
  std::shuffle(pts.begin(), pts.end(), rng);
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::size_t pairs = std::uniform_int_distribution<std::size_t>(0, n / 2)(rng);
  for (std::size_t k = 0; k < pairs; ++k) {
    img[pts[2 * k]] = pts[2 * k + 1];
    img[pts[2 * k + 1]] = pts[2 * k];
  }
  return Permutation(img);
}

inline InvolutionTriple random_triple(std::size_t n, std::mt19937_64& rng) {
  return {random_involution(n, rng), random_involution(n, rng), random_involution(n, rng)};
}

inline InvolutionTriple random_transitive_triple(std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    InvolutionTriple t = random_triple(n, rng);
    if (quiltforge::is_transitive(t)) return t;
  }
}

// Every permutation of {0..n-1}, lexicographic.
inline std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<Permutation> out;
  do out.emplace_back(img);
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

inline InvolutionTriple T(const char* a, const char* b, const char* c, std::size_t n) {
  return InvolutionTriple::parse(a, b, c, n);
}

}  // namespace qf_test
