#include "quiltforge/transplant.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace quiltforge {

std::vector<RationalMatrix> intertwiner_basis(const InvolutionTriple& left,
                                              const InvolutionTriple& right) {
  if (left.n() != right.n()) throw Error("intertwiner requested for triples of different sizes");
  const std::size_t n = left.n();
  auto unknown = [n](std::size_t i, std::size_t j) { return i * n + j; };

  // (T P_l)(i, j) = T(i, l(j)) and (P_r T)(i, j) = T(r(i), j).
  std::vector<SparseRow> equations;
  equations.reserve(3 * n * n);
  for (int g = 0; g < 3; ++g) {
    const Permutation& l = left.gen(g);
    const Permutation& r = right.gen(g);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t u = unknown(i, l(static_cast<Point>(j)));
        std::size_t v = unknown(r(static_cast<Point>(i)), j);
        if (u == v) continue;
        SparseRow row;
        if (u < v) {
          row.emplace_back(u, 1);
          row.emplace_back(v, -1);
        } else {
          row.emplace_back(v, -1);
          row.emplace_back(u, 1);
        }
        equations.push_back(std::move(row));
      }
    }
  }

  std::vector<RationalMatrix> basis;
  for (const auto& v : null_space(equations, n * n)) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = v[unknown(i, j)];
    basis.push_back(std::move(m));
  }
  return basis;
}

namespace {

RationalMatrix combine(const std::vector<RationalMatrix>& basis,
                       const std::vector<Rational>& coeffs) {
  RationalMatrix m(basis.front().rows(), basis.front().cols());
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (coeffs[k] != 0) m = m + basis[k].scaled(coeffs[k]);
  return m;
}

constexpr std::size_t kDeterministicBudget = 256;
constexpr int kRandomCombinations = 64;
constexpr int kRandomLines = 8;

// Coefficient tuples over -3..3 with a fixed L1 norm, in ranked lexicographic
// order. Calls visit() until it returns true or the budget runs out.
bool scan_norm(std::size_t m, int norm, std::size_t& budget,
               const std::function<bool(const std::vector<int>&)>& visit) {
  static constexpr int kRanked[] = {1, -1, 2, -2, 3, -3, 0};
  std::vector<int> coeffs(m, 0);
  std::function<bool(std::size_t, int)> rec = [&](std::size_t pos, int remaining) -> bool {
    if (budget == 0) return false;
    if (pos == m) {
      if (remaining != 0) return false;
      --budget;
      return visit(coeffs);
    }
    // Each later position contributes at most 3.
    for (int v : kRanked) {
      int a = std::abs(v);
      if (a > remaining) continue;
      if (remaining - a > 3 * static_cast<int>(m - pos - 1)) continue;
      coeffs[pos] = v;
      if (rec(pos + 1, remaining - a)) return true;
      if (budget == 0) return false;
    }
    coeffs[pos] = 0;
    return false;
  };
  return rec(0, norm);
}

}  // namespace

std::optional<RationalMatrix> find_invertible_intertwiner(const std::vector<RationalMatrix>& basis,
                                                          std::uint64_t rng_seed) {
  if (basis.empty()) return std::nullopt;
  const std::size_t rows = basis.front().rows();
  for (const auto& b : basis)
    if (b.rows() != rows || b.cols() != basis.front().cols())
      throw Error("intertwiner basis matrices differ in shape");
  if (rows != basis.front().cols()) return std::nullopt;

  const std::size_t m = basis.size();
  std::optional<RationalMatrix> found;

  std::size_t budget = kDeterministicBudget;
  for (int norm = 1; norm <= 3 * static_cast<int>(m) && budget > 0 && !found; ++norm) {
    scan_norm(m, norm, budget, [&](const std::vector<int>& c) {
      std::vector<Rational> coeffs(c.begin(), c.end());
      RationalMatrix t = combine(basis, coeffs);
      if (determinant(t) != 0) {
        found = std::move(t);
        return true;
      }
      return false;
    });
  }
  if (found) return found;

  std::mt19937_64 rng(rng_seed);
  std::uniform_int_distribution<long> coeff(-1000, 1000);
  auto random_coeffs = [&] {
    std::vector<Rational> c(m);
    for (auto& x : c) x = coeff(rng);
    return c;
  };

  for (int trial = 0; trial < kRandomCombinations; ++trial) {
    RationalMatrix t = combine(basis, random_coeffs());
    if (determinant(t) != 0) return t;
  }

  // det(A + tB) has degree at most n in t, so n + 1 zeros on a line mean it
  // vanishes on the whole line.
  for (int line = 0; line < kRandomLines; ++line) {
    std::vector<Rational> base = random_coeffs();
    std::vector<Rational> dir = random_coeffs();
    for (std::size_t step = 0; step <= rows; ++step) {
      std::vector<Rational> c(m);
      for (std::size_t k = 0; k < m; ++k) c[k] = base[k] + Rational(static_cast<long>(step)) * dir[k];
      RationalMatrix t = combine(basis, c);
      if (determinant(t) != 0) return t;
    }
  }
  return std::nullopt;
}

std::optional<RationalMatrix> find_binary_intertwiner(const std::vector<RationalMatrix>& basis,
                                                      std::size_t max_basis) {
  if (basis.empty() || basis.size() > max_basis || basis.size() >= 63) return std::nullopt;
  const std::size_t m = basis.size();
  // Subsets in order of size, then by bitmask.
  std::vector<std::uint64_t> masks;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint64_t x, std::uint64_t y) {
    return __builtin_popcountll(x) < __builtin_popcountll(y);
  });
  for (std::uint64_t mask : masks) {
    std::vector<Rational> c(m);
    for (std::size_t k = 0; k < m; ++k) c[k] = (mask >> k) & 1 ? 1 : 0;
    RationalMatrix t = combine(basis, c);
    bool binary = true;
    for (std::size_t i = 0; i < t.rows() && binary; ++i)
      for (std::size_t j = 0; j < t.cols(); ++j)
        if (t(i, j) != 0 && t(i, j) != 1) {
          binary = false;
          break;
        }
    if (binary && determinant(t) != 0) return t;
  }
  return std::nullopt;
}

std::optional<Permutation> find_permutation_isomorphism(const InvolutionTriple& left,
                                                        const InvolutionTriple& right) {
  if (left.n() != right.n()) throw Error("isomorphism requested for triples of different sizes");
  const std::size_t n = left.n();
  for (int g = 0; g < 3; ++g)
    if (left.gen(g).fixed_point_count() != right.gen(g).fixed_point_count()) return std::nullopt;

  constexpr Point kNone = static_cast<Point>(-1);
  const auto orbits = orbit_partition(left);
  std::vector<Point> image(n, kNone);
  std::vector<bool> used(n, false);

  // Extends sigma from start -> target along the generators; records every
  // newly assigned point in `assigned` so the caller can undo.
  auto propagate = [&](Point start, Point target, std::vector<Point>& assigned) {
    image[start] = target;
    used[target] = true;
    assigned.push_back(start);
    for (std::size_t head = 0; head < assigned.size(); ++head) {
      Point p = assigned[head];
      for (int g = 0; g < 3; ++g) {
        Point q = left.gen(g)(p);
        Point want = right.gen(g)(image[p]);
        if (image[q] == kNone) {
          if (used[want]) return false;
          image[q] = want;
          used[want] = true;
          assigned.push_back(q);
        } else if (image[q] != want) {
          return false;
        }
      }
    }
    return true;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
    if (k == orbits.size()) return true;
    Point start = orbits[k].front();
    for (Point target = 0; target < n; ++target) {
      if (used[target]) continue;
      std::vector<Point> assigned;
      bool ok = propagate(start, target, assigned) && assigned.size() == orbits[k].size();
      if (ok && search(k + 1)) return true;
      for (Point p : assigned) {
        used[image[p]] = false;
        image[p] = kNone;
      }
    }
    return false;
  };

  if (!search(0)) return std::nullopt;
  Permutation sigma(std::move(image));
  for (int g = 0; g < 3; ++g)
    if (left.gen(g).relabeled(sigma) != right.gen(g))
      throw Error("internal error: isomorphism search returned an invalid map");
  return sigma;
}

namespace {

// Visits (word, rho(word)) for reduced words by length, then lexicographically.
template <typename Visit>
void for_each_reduced_word(const InvolutionTriple* t, std::size_t n, std::size_t max_len,
                           Visit visit) {
  struct Entry {
    GeneratorWord word;
    Permutation perm;
  };
  std::vector<Entry> level{{GeneratorWord{}, Permutation::identity(n)}};
  if (!visit(level.front().word, level.front().perm)) return;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Entry> next;
    next.reserve(level.size() * 3);
    for (const auto& e : level) {
      for (int g = 0; g < 3; ++g) {
        auto letter = static_cast<Generator>(g);
        if (!e.word.letters.empty() && e.word.letters.back() == letter) continue;
        Entry child{e.word, t ? e.perm.then(t->gen(g)) : e.perm};
        child.word.letters.push_back(letter);
        if (!visit(child.word, child.perm)) return;
        next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }
}

}  // namespace

Fingerprint fingerprint(const InvolutionTriple& t, std::size_t max_len) {
  if (max_len < 1) throw Error("fingerprint length must be at least 1");
  Fingerprint fp;
  fp.max_len = max_len;
  for_each_reduced_word(&t, t.n(), max_len, [&](const GeneratorWord&, const Permutation& p) {
    fp.counts.push_back(static_cast<std::uint32_t>(p.fixed_point_count()));
    return true;
  });
  return fp;
}

std::vector<GeneratorWord> reduced_words(std::size_t max_len) {
  std::vector<GeneratorWord> words;
  for_each_reduced_word(nullptr, 1, max_len, [&](const GeneratorWord& w, const Permutation&) {
    words.push_back(w);
    return true;
  });
  return words;
}

std::optional<GeneratorWord> distinguishing_word(const InvolutionTriple& left,
                                                 const InvolutionTriple& right,
                                                 std::size_t max_len) {
  Fingerprint fl = fingerprint(left, max_len);
  Fingerprint fr = fingerprint(right, max_len);
  for (std::size_t k = 0; k < fl.counts.size(); ++k)
    if (fl.counts[k] != fr.counts[k]) return reduced_words(max_len)[k];
  return std::nullopt;
}

bool intertwines(const RationalMatrix& t, const InvolutionTriple& left,
                 const InvolutionTriple& right) {
  if (t.rows() != right.n() || t.cols() != left.n()) return false;
  for (int g = 0; g < 3; ++g)
    if (!(t.times_permutation(left.gen(g)) == t.permutation_times(right.gen(g)))) return false;
  return true;
}

TransplantablePair::TransplantablePair(InvolutionTriple left, InvolutionTriple right,
                                       RationalMatrix intertwiner)
    : left_(std::move(left)), right_(std::move(right)), intertwiner_(std::move(intertwiner)) {
  if (left_.n() != right_.n()) throw Error("transplantable pair members differ in size");
  if (!intertwines(intertwiner_, left_, right_))
    throw Error("certificate rejected: matrix does not intertwine the triples");
  if (determinant(intertwiner_) == 0) throw Error("certificate rejected: intertwiner is singular");
  if (find_permutation_isomorphism(left_, right_))
    throw Error("certificate rejected: triples are permutation-isomorphic");
}

const char* to_string(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::transplantable: return "transplantable";
    case Verdict::Kind::isomorphic: return "isomorphic";
    case Verdict::Kind::inequivalent: return "inequivalent";
  }
  return "?";
}

Verdict check_transplantable(const InvolutionTriple& left, const InvolutionTriple& right,
                             std::uint64_t rng_seed) {
  if (left.n() != right.n()) throw Error("pair members act on different point counts");
  if (!is_transitive(left) || !is_transitive(right))
    throw Error("pair member is not transitive: the glued object would be disconnected");

  if (auto word = distinguishing_word(left, right, 6))
    return {Verdict::Kind::inequivalent, std::nullopt, std::nullopt, std::move(word)};

  auto t = find_invertible_intertwiner(intertwiner_basis(left, right), rng_seed);
  if (!t)
    return {Verdict::Kind::inequivalent, std::nullopt, std::nullopt,
            distinguishing_word(left, right, 8)};

  if (auto sigma = find_permutation_isomorphism(left, right))
    return {Verdict::Kind::isomorphic, std::nullopt, std::move(sigma), std::nullopt};

  return {Verdict::Kind::transplantable, TransplantablePair(left, right, std::move(*t)),
          std::nullopt, std::nullopt};
}

}  // namespace quiltforge
