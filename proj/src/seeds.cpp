#include "quiltforge/seeds.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace quiltforge {

namespace {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

}  // namespace

FiniteField::FiniteField(int q) : q_(q) {
  std::vector<int> modulus;  // monic, lowest degree first
  int degree = 1;
  if (q < 64 && is_prime(q)) {
    p_ = q;
  } else if (q == 4) {
    p_ = 2, degree = 2, modulus = {1, 1, 1};
  } else if (q == 8) {
    p_ = 2, degree = 3, modulus = {1, 1, 0, 1};
  } else if (q == 9) {
    p_ = 3, degree = 2, modulus = {1, 0, 1};
  } else {
    throw Error("unsupported field size " + std::to_string(q));
  }

  auto digits = [&](int x) {
    std::vector<int> d(degree);
    for (int i = 0; i < degree; ++i, x /= p_) d[i] = x % p_;
    return d;
  };
  auto number = [&](const std::vector<int>& d) {
    int x = 0;
    for (int i = degree - 1; i >= 0; --i) x = x * p_ + d[i];
    return x;
  };

  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  for (int x = 0; x < q; ++x) {
    auto dx = digits(x);
    std::vector<int> n(degree);
    for (int i = 0; i < degree; ++i) n[i] = (p_ - dx[i]) % p_;
    neg_[x] = number(n);
    for (int y = 0; y < q; ++y) {
      auto dy = digits(y);
      std::vector<int> s(degree);
      for (int i = 0; i < degree; ++i) s[i] = (dx[i] + dy[i]) % p_;
      add_[x * q + y] = number(s);

      std::vector<int> prod(2 * degree - 1, 0);
      for (int i = 0; i < degree; ++i)
        for (int j = 0; j < degree; ++j) prod[i + j] = (prod[i + j] + dx[i] * dy[j]) % p_;
      for (int k = 2 * degree - 2; k >= degree; --k) {
        int f = prod[k];
        if (f == 0) continue;
        for (int i = 0; i <= degree; ++i)
          prod[k - degree + i] = ((prod[k - degree + i] - f * modulus[i]) % p_ + p_) % p_;
      }
      prod.resize(degree);
      mul_[x * q + y] = number(prod);
    }
  }
  inv_.assign(q, 0);
  for (int x = 1; x < q; ++x)
    for (int y = 1; y < q; ++y)
      if (mul(x, y) == 1) inv_[x] = y;
  frob_.resize(q);
  for (int x = 0; x < q; ++x) {
    int r = 1;
    for (int i = 0; i < p_; ++i) r = mul(r, x);
    frob_[x] = r;
  }
}

int FiniteField::inv(int x) const {
  if (x == 0) throw Error("division by zero in finite field");
  return inv_[x];
}

namespace {

// Scales v so its first nonzero coordinate is 1; returns false for zero.
bool normalize(const FiniteField& f, FieldVector& v) {
  for (int x : v) {
    if (x == 0) continue;
    int s = f.inv(x);
    for (int& y : v) y = f.mul(s, y);
    return true;
  }
  return false;
}

int dot(const FiniteField& f, const FieldVector& u, const FieldVector& v) {
  int s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s = f.add(s, f.mul(u[i], v[i]));
  return s;
}

FieldVector apply(const FiniteField& f, const FieldMatrix& m, const FieldVector& v) {
  FieldVector out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(f, m[i], v);
  return out;
}

FieldVector frobenius(const FiniteField& f, FieldVector v, int power) {
  for (int k = 0; k < power; ++k)
    for (int& x : v) x = f.frobenius(x);
  return v;
}

// Inverse transpose by Gauss-Jordan; throws for a singular matrix.
FieldMatrix inverse_transpose(const FiniteField& f, const FieldMatrix& m) {
  const std::size_t n = m.size();
  FieldMatrix a = m;
  FieldMatrix inv(n, FieldVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw Error("singular matrix has no collineation action");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    int s = f.inv(a[col][col]);
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] = f.mul(s, a[col][j]);
      inv[col][j] = f.mul(s, inv[col][j]);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      int g = f.neg(a[r][col]);
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] = f.add(a[r][j], f.mul(g, a[col][j]));
        inv[r][j] = f.add(inv[r][j], f.mul(g, inv[col][j]));
      }
    }
  }
  FieldMatrix t(n, FieldVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = inv[j][i];
  return t;
}

std::size_t vector_code(const FieldVector& v, int q) {
  std::size_t code = 0;
  for (int x : v) code = code * static_cast<std::size_t>(q) + static_cast<std::size_t>(x);
  return code;
}

}  // namespace

RationalMatrix ProjectiveSpace::incidence_matrix() const {
  RationalMatrix m(size(), size());
  for (std::size_t h = 0; h < size(); ++h)
    for (std::size_t p = 0; p < size(); ++p) m(h, p) = incidence[h][p];
  return m;
}

ProjectiveSpace build_projective_space(int dim, int q) {
  if (dim < 1) throw Error("projective dimension must be at least 1");
  ProjectiveSpace s;
  s.dim = dim;
  s.q = q;
  s.field = FiniteField(q);
  const int len = dim + 1;

  FieldVector v(len, 0);
  for (;;) {
    FieldVector w = v;
    bool nonzero = normalize(s.field, w);
    if (nonzero && w == v) s.points.push_back(v);
    int pos = len - 1;
    while (pos >= 0 && v[pos] == q - 1) v[pos--] = 0;
    if (pos < 0) break;
    ++v[pos];
  }
  s.hyperplanes = s.points;
  s.incidence.assign(s.size(), std::vector<std::uint8_t>(s.size(), 0));
  for (std::size_t h = 0; h < s.size(); ++h)
    for (std::size_t p = 0; p < s.size(); ++p)
      s.incidence[h][p] = dot(s.field, s.hyperplanes[h], s.points[p]) == 0;
  return s;
}

GroupElementAction collineation_actions(const ProjectiveSpace& s, const FieldMatrix& m,
                                        int frobenius_power) {
  const std::size_t len = static_cast<std::size_t>(s.dim + 1);
  if (m.size() != len) throw Error("collineation matrix has the wrong size");
  for (const auto& row : m)
    if (row.size() != len) throw Error("collineation matrix has the wrong size");
  FieldMatrix dual = inverse_transpose(s.field, m);

  std::unordered_map<std::size_t, Point> index;
  for (std::size_t i = 0; i < s.size(); ++i) index[vector_code(s.points[i], s.q)] = static_cast<Point>(i);

  auto act = [&](const FieldMatrix& mat, const std::vector<FieldVector>& objs) {
    std::vector<Point> image(objs.size());
    for (std::size_t i = 0; i < objs.size(); ++i) {
      FieldVector w = apply(s.field, mat, frobenius(s.field, objs[i], frobenius_power));
      if (!normalize(s.field, w)) throw Error("singular matrix has no collineation action");
      image[i] = index.at(vector_code(w, s.q));
    }
    return Permutation(std::move(image));
  };

  GroupElementAction g{m, frobenius_power, act(m, s.points), act(dual, s.hyperplanes)};
  for (std::size_t h = 0; h < s.size(); ++h)
    for (std::size_t p = 0; p < s.size(); ++p)
      if (s.incidence[h][p] != s.incidence[g.hyperplane_perm(static_cast<Point>(h))]
                                          [g.point_perm(static_cast<Point>(p))])
        throw Error("collineation does not preserve incidence");
  return g;
}

std::vector<GroupElementAction> involutory_collineations(const ProjectiveSpace& s,
                                                         bool include_semilinear) {
  const FiniteField& f = s.field;
  const std::size_t len = static_cast<std::size_t>(s.dim + 1);
  const std::size_t entries = len * len;
  int degree = 1;
  for (int x = s.q; x > f.characteristic(); x /= f.characteristic()) ++degree;
  const int max_power = include_semilinear ? degree - 1 : 0;

  std::vector<GroupElementAction> result;
  std::set<std::vector<Point>> seen;
  std::vector<int> flat(entries, 0);
  FieldMatrix m(len, FieldVector(len));
  for (;;) {
    for (std::size_t i = 0; i < entries; ++i) m[i / len][i % len] = flat[i];
    for (int power = 0; power <= max_power; ++power) {
      // (M phi)^2 = M phi(M) phi^2 must be a nonzero scalar with phi^2 = 1.
      if ((2 * power) % degree != 0) continue;
      FieldMatrix fm = m;
      for (auto& row : fm) row = frobenius(f, row, power);
      bool scalar = true;
      int lambda = -1;
      for (std::size_t i = 0; i < len && scalar; ++i) {
        for (std::size_t j = 0; j < len; ++j) {
          int v = 0;
          for (std::size_t k = 0; k < len; ++k) v = f.add(v, f.mul(m[i][k], fm[k][j]));
          if (i == j) {
            if (lambda < 0) lambda = v;
            if (v != lambda || v == 0) {
              scalar = false;
              break;
            }
          } else if (v != 0) {
            scalar = false;
            break;
          }
        }
      }
      if (!scalar) continue;
      GroupElementAction g = collineation_actions(s, m, power);
      if (g.point_perm.is_identity()) continue;
      std::vector<Point> key(g.point_perm.images().begin(), g.point_perm.images().end());
      if (!seen.insert(key).second) continue;
      result.push_back(std::move(g));
    }
    std::size_t pos = entries;
    while (pos > 0 && flat[pos - 1] == s.q - 1) flat[--pos] = 0;
    if (pos == 0) break;
    ++flat[pos - 1];
  }
  return result;
}

namespace {

// Representatives of the conjugacy classes of `elements` under the group they
// generate, as indices into `elements`.
std::vector<std::size_t> conjugacy_class_representatives(const std::vector<Permutation>& elements) {
  std::map<Permutation, std::size_t> position;
  for (std::size_t i = 0; i < elements.size(); ++i) position.emplace(elements[i], i);
  std::vector<bool> covered(elements.size(), false);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (covered[i]) continue;
    reps.push_back(i);
    std::vector<std::size_t> stack{i};
    covered[i] = true;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (const auto& h : elements) {
        auto it = position.find(elements[x].relabeled(h));
        if (it != position.end() && !covered[it->second]) {
          covered[it->second] = true;
          stack.push_back(it->second);
        }
      }
    }
  }
  return reps;
}

// Shared search over triples (g1, g2, g3) of involutions given by their two
// actions; g1 runs over class representatives and g2 <= g3 since swapping the
// roles of b and c gives the same pair class.
std::vector<TriplePair> search_triples(const std::vector<Permutation>& first,
                                       const std::vector<Permutation>& second) {
  const auto reps = conjugacy_class_representatives(first);
  std::map<std::string, TriplePair> found;
  std::unordered_set<std::string> rejected;
  for (std::size_t i : reps) {
    for (std::size_t j = 0; j < first.size(); ++j) {
      for (std::size_t k = j; k < first.size(); ++k) {
        InvolutionTriple left(first[i], first[j], first[k]);
        if (!is_transitive(left)) continue;
        InvolutionTriple right(second[i], second[j], second[k]);
        if (canonical_key(left) == canonical_key(right)) continue;
        TriplePair pair{left, right};
        std::string key = pair_class_key(pair);
        if (found.count(key) || rejected.count(key)) continue;
        if (!is_transitive(right)) {
          rejected.insert(key);
          continue;
        }
        Verdict v = check_transplantable(left, right);
        if (v.kind == Verdict::Kind::transplantable)
          found.emplace(key, std::move(pair));
        else
          rejected.insert(key);
      }
    }
  }
  std::vector<TriplePair> out;
  for (auto& [key, pair] : found) out.push_back(std::move(pair));
  return out;
}

}  // namespace

std::vector<TriplePair> projective_seed_search(const ProjectiveSpace& s, bool include_semilinear) {
  std::vector<Permutation> points, hyperplanes;
  for (auto& g : involutory_collineations(s, include_semilinear)) {
    points.push_back(g.point_perm);
    hyperplanes.push_back(g.hyperplane_perm);
  }
  return search_triples(points, hyperplanes);
}

namespace {

// PSL(2,p) as normalized 2x2 matrices modulo +-I with a full product table.
struct Psl2 {
  int p;
  std::vector<std::array<int, 4>> elements;
  std::vector<std::uint16_t> table;  // table[i * size + j] = elements[i] * elements[j]
  std::size_t identity = 0;

  explicit Psl2(int prime) : p(prime) {
    std::map<std::array<int, 4>, std::size_t> index;
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b)
        for (int c = 0; c < p; ++c)
          for (int d = 0; d < p; ++d) {
            if (((a * d - b * c) % p + p) % p != 1) continue;
            auto m = normalized({a, b, c, d});
            if (index.emplace(m, 0).second) elements.push_back(m);
          }
    std::sort(elements.begin(), elements.end());
    for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = i;
    identity = index.at(normalized({1, 0, 0, 1}));
    const std::size_t n = elements.size();
    table.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto& x = elements[i];
        const auto& y = elements[j];
        std::array<int, 4> prod{(x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p,
                                (x[2] * y[0] + x[3] * y[2]) % p, (x[2] * y[1] + x[3] * y[3]) % p};
        table[i * n + j] = static_cast<std::uint16_t>(index.at(normalized(prod)));
      }
  }

  std::array<int, 4> normalized(std::array<int, 4> m) const {
    std::array<int, 4> neg;
    for (int i = 0; i < 4; ++i) neg[i] = (p - m[i] % p) % p, m[i] = (m[i] % p + p) % p;
    return std::min(m, neg);
  }

  std::size_t size() const { return elements.size(); }
  std::size_t mul(std::size_t x, std::size_t y) const { return table[x * size() + y]; }
  std::size_t inverse(std::size_t x) const {
    for (std::size_t y = 0; y < size(); ++y)
      if (mul(x, y) == identity) return y;
    throw Error("group element without inverse");
  }
  int order(std::size_t x) const {
    int k = 1;
    for (std::size_t y = x; y != identity; y = mul(y, x)) ++k;
    return k;
  }
  std::vector<std::size_t> closure(const std::vector<std::size_t>& gens) const {
    std::vector<bool> in(size(), false);
    std::vector<std::size_t> members{identity};
    in[identity] = true;
    for (std::size_t head = 0; head < members.size(); ++head)
      for (std::size_t g : gens) {
        std::size_t y = mul(members[head], g);
        if (!in[y]) {
          in[y] = true;
          members.push_back(y);
        }
      }
    std::sort(members.begin(), members.end());
    return members;
  }
};

}  // namespace

CosetActions psl2_coset_actions() {
  constexpr int kPrime = 11;
  constexpr std::size_t kSubgroupOrder = 60;
  Psl2 g(kPrime);

  std::vector<std::size_t> involutions, order3;
  for (std::size_t x = 0; x < g.size(); ++x) {
    int o = g.order(x);
    if (o == 2) involutions.push_back(x);
    if (o == 3) order3.push_back(x);
  }
  std::vector<std::size_t> inverse(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) inverse[x] = g.inverse(x);

  auto conjugates = [&](const std::vector<std::size_t>& h) {
    std::set<std::vector<std::size_t>> all;
    for (std::size_t x = 0; x < g.size(); ++x) {
      std::vector<std::size_t> c;
      c.reserve(h.size());
      for (std::size_t y : h) c.push_back(g.mul(g.mul(x, y), inverse[x]));
      std::sort(c.begin(), c.end());
      all.insert(std::move(c));
    }
    return all;
  };

  // Subgroups <x, y> with x^2 = y^3 = (xy)^5 = 1 of order 60.
  std::vector<std::size_t> first, second;
  std::set<std::vector<std::size_t>> first_class;
  for (std::size_t x : involutions) {
    for (std::size_t y : order3) {
      if (g.order(g.mul(x, y)) != 5) continue;
      auto h = g.closure({x, y});
      if (h.size() != kSubgroupOrder) continue;
      if (first.empty()) {
        first = h;
        first_class = conjugates(first);
      } else if (!first_class.count(h)) {
        second = h;
        break;
      }
    }
    if (!second.empty()) break;
  }
  if (first.empty() || second.empty())
    throw Error("failed to find two non-conjugate subgroups of order 60 in PSL(2,11)");

  auto coset_action = [&](const std::vector<std::size_t>& h) {
    std::vector<int> coset_of(g.size(), -1);
    int count = 0;
    for (std::size_t x = 0; x < g.size(); ++x) {
      if (coset_of[x] >= 0) continue;
      for (std::size_t y : h) coset_of[g.mul(x, y)] = count;
      ++count;
    }
    std::vector<std::size_t> rep(count);
    for (std::size_t x = g.size(); x-- > 0;) rep[coset_of[x]] = x;
    std::vector<Permutation> perms;
    for (std::size_t inv : involutions) {
      std::vector<Point> image(count);
      for (int c = 0; c < count; ++c) image[c] = static_cast<Point>(coset_of[g.mul(inv, rep[c])]);
      perms.emplace_back(std::move(image));
    }
    return std::make_pair(count, perms);
  };

  auto [d1, a1] = coset_action(first);
  auto [d2, a2] = coset_action(second);
  if (d1 != d2) throw Error("coset actions have different degrees");

  CosetActions out;
  out.group_order = g.size();
  out.subgroup_order = kSubgroupOrder;
  out.degree = static_cast<std::size_t>(d1);
  out.subgroups_conjugate = first_class.count(second) > 0;
  out.first = std::move(a1);
  out.second = std::move(a2);
  return out;
}

std::vector<TriplePair> psl2_seed_search(const CosetActions& actions) {
  return search_triples(actions.first, actions.second);
}

std::vector<Permutation> all_involutions(std::size_t n) {
  std::vector<Permutation> out;
  std::vector<Point> image(n);
  std::vector<bool> used(n, false);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      out.emplace_back(image);
      return;
    }
    if (used[i]) {
      rec(i + 1);
      return;
    }
    // Partner j: i itself first (fixed), then larger unused points.
    for (std::size_t j = i; j < n; ++j) {
      if (used[j]) continue;
      image[i] = static_cast<Point>(j);
      image[j] = static_cast<Point>(i);
      used[i] = used[j] = true;
      rec(i + 1);
      used[i] = used[j] = false;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TriplePair> brute_force_pairs(std::size_t n, bool allow_large) {
  if (n == 0) throw Error("point count must be positive");
  if (n > 8 && !allow_large) throw Error("brute force is limited to n <= 8 without override");

  const auto involutions = all_involutions(n);
  // One a per conjugacy class: (1 2)(3 4)...(2k-1 2k).
  std::map<std::string, InvolutionTriple> triples;
  for (std::size_t k = 0; 2 * k <= n; ++k) {
    std::vector<Point> image(n);
    for (std::size_t i = 0; i < n; ++i) image[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < k; ++i) std::swap(image[2 * i], image[2 * i + 1]);
    Permutation a(std::move(image));
    for (const auto& b : involutions)
      for (const auto& c : involutions) {
        InvolutionTriple t(a, b, c);
        if (!is_transitive(t)) continue;
        auto form = canonicalize(t);
        triples.emplace(encode(form.triple), std::move(form.triple));
      }
  }

  std::map<std::vector<std::uint32_t>, std::vector<const InvolutionTriple*>> buckets;
  for (const auto& [key, t] : triples) buckets[fingerprint(t, 6).counts].push_back(&t);

  std::map<std::string, TriplePair> found;
  for (const auto& [fp, members] : buckets) {
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        TriplePair pair{*members[i], *members[j]};
        std::string key = pair_class_key(pair);
        if (found.count(key)) continue;
        if (check_transplantable(pair.first, pair.second).kind == Verdict::Kind::transplantable)
          found.emplace(std::move(key), std::move(pair));
      }
  }
  std::vector<TriplePair> out;
  for (auto& [key, pair] : found) out.push_back(std::move(pair));
  return out;
}

}  // namespace quiltforge

namespace quiltforge {

std::vector<Quilt> quilts_of(const std::vector<TriplePair>& pairs, std::uint64_t rng_seed) {
  std::vector<Quilt> quilts;
  std::set<std::string> covered;
  for (const auto& p : pairs) {
    if (covered.count(pair_class_key(p))) continue;
    Quilt q = enumerate_quilt(p, "", kDefaultMaxClasses, rng_seed);
    for (const auto& c : q.classes) covered.insert(c.key);
    quilts.push_back(std::move(q));
  }
  auto min_key = [](const Quilt& q) {
    std::string best = q.classes.front().key;
    for (const auto& c : q.classes) best = std::min(best, c.key);
    return best;
  };
  std::sort(quilts.begin(), quilts.end(),
            [&](const Quilt& x, const Quilt& y) { return min_key(x) < min_key(y); });
  return quilts;
}

namespace {

NamedSeed seed_of(const Quilt& q, const std::string& name) {
  const PairClass* best = &q.classes.front();
  for (const auto& c : q.classes)
    if (c.key < best->key) best = &c;
  return {name, best->representative, q.size()};
}

bool treelike_quilt(const Quilt& q) {
  const auto& t = q.seed().representative.first;
  return glued_pair_count(t) + 1 == t.n();
}

bool fixes_seven_each(const Quilt& q) {
  const auto& t = q.seed().representative.first;
  for (int x = 0; x < 3; ++x)
    if (t.gen(x).fixed_point_count() != 7) return false;
  return true;
}

std::string describe_surplus(int size, const std::vector<const Quilt*>& rest) {
  std::string msg = "size " + std::to_string(size) + ": " + std::to_string(rest.size()) +
                    " further quilt(s) not in the catalog, with class counts";
  for (std::size_t i = 0; i < rest.size(); ++i)
    msg += (i ? ", " : " ") + std::to_string(rest[i]->size());
  return msg;
}

}  // namespace

SeedReport catalog_seeds(const std::vector<int>& sizes) {
  SeedReport report;
  std::set<int> wanted(sizes.begin(), sizes.end());
  for (int s : wanted)
    if (s != 7 && s != 11 && s != 13 && s != 15 && s != 21)
      throw Error("no catalog quilts of size " + std::to_string(s));

  auto select = [&](int size, const std::vector<Quilt>& quilts, auto keep) {
    std::vector<const Quilt*> chosen, rest;
    for (const auto& q : quilts) (keep(q) ? chosen : rest).push_back(&q);
    if (!rest.empty()) report.warnings.push_back(describe_surplus(size, rest));
    if (chosen.empty())
      report.warnings.push_back("size " + std::to_string(size) + ": no quilt selected");
    return chosen;
  };
  auto all = [](const Quilt&) { return true; };

  if (wanted.count(7)) {
    auto quilts = quilts_of(projective_seed_search(build_projective_space(2, 2)));
    for (const Quilt* q : select(7, quilts, all)) report.seeds.push_back(seed_of(*q, "7"));
  }
  if (wanted.count(11)) {
    auto quilts = quilts_of(psl2_seed_search(psl2_coset_actions()));
    auto chosen = select(11, quilts, all);
    // Four-class quilts keep their key order (f before h).
    std::vector<const Quilt*> four;
    const Quilt* six = nullptr;
    const Quilt* five = nullptr;
    for (const Quilt* q : chosen) {
      if (q->size() == 6 && !six) six = q;
      else if (q->size() == 5 && !five) five = q;
      else if (q->size() == 4 && four.size() < 2) four.push_back(q);
      else report.warnings.push_back("size 11: unexpected quilt with " +
                                     std::to_string(q->size()) + " classes");
    }
    if (four.size() > 0) report.seeds.push_back(seed_of(*four[0], "11f"));
    if (six) report.seeds.push_back(seed_of(*six, "11g"));
    if (four.size() > 1) report.seeds.push_back(seed_of(*four[1], "11h"));
    if (five) report.seeds.push_back(seed_of(*five, "11i"));
  }
  if (wanted.count(13)) {
    auto quilts = quilts_of(projective_seed_search(build_projective_space(2, 3)));
    auto chosen = select(13, quilts, all);
    std::stable_sort(chosen.begin(), chosen.end(),
                     [](const Quilt* x, const Quilt* y) { return x->size() > y->size(); });
    for (std::size_t i = 0; i < chosen.size(); ++i)
      report.seeds.push_back(seed_of(*chosen[i], "13" + std::string(1, char('a' + i))));
  }
  if (wanted.count(15)) {
    auto quilts = quilts_of(projective_seed_search(build_projective_space(3, 2)));
    for (const Quilt* q : select(15, quilts, treelike_quilt))
      report.seeds.push_back(seed_of(*q, "15"));
  }
  if (wanted.count(21)) {
    auto quilts = quilts_of(projective_seed_search(build_projective_space(2, 4), true));
    for (const Quilt* q : select(21, quilts, fixes_seven_each))
      report.seeds.push_back(seed_of(*q, "21"));
  }
  return report;
}

}  // namespace quiltforge
