#include "quiltforge/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace quiltforge {

Permutation::Permutation(std::vector<Point> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (Point p : image_) {
    if (p >= image_.size() || hit[p]) throw Error("permutation image is not a bijection");
    hit[p] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Point> image(n);
  std::iota(image.begin(), image.end(), Point{0});
  Permutation p;
  p.image_ = std::move(image);
  return p;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size()) throw Error("composing permutations of different sizes");
  Permutation r;
  r.image_.resize(size());
  for (std::size_t i = 0; i < size(); ++i) r.image_[i] = next.image_[image_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.image_.resize(size());
  for (std::size_t i = 0; i < size(); ++i) r.image_[image_[i]] = static_cast<Point>(i);
  return r;
}

Permutation Permutation::relabeled(const Permutation& sigma) const {
  if (sigma.size() != size()) throw Error("relabeling has the wrong size");
  Permutation r;
  r.image_.resize(size());
  for (std::size_t i = 0; i < size(); ++i) r.image_[sigma.image_[i]] = sigma.image_[image_[i]];
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

bool Permutation::is_involution() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (image_[image_[i]] != i) return false;
  return true;
}

std::size_t Permutation::fixed_point_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < size(); ++i) count += image_[i] == i;
  return count;
}

std::size_t Permutation::transposition_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < size(); ++i) count += image_[i] > i && image_[image_[i]] == i;
  return count;
}

Permutation parse_cycles(std::string_view text, std::size_t n) {
  std::vector<Point> image(n);
  std::iota(image.begin(), image.end(), Point{0});
  std::vector<bool> seen(n, false);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw Error("malformed cycle notation: expected '('");
    ++pos;
    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (pos >= text.size()) throw Error("malformed cycle notation: unclosed '('");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw Error("malformed cycle notation: unexpected character");
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > n) throw Error("point out of range in cycle notation");
        ++pos;
      }
      if (value < 1 || value > n) throw Error("point out of range in cycle notation");
      Point p = static_cast<Point>(value - 1);
      if (seen[p]) throw Error("repeated point " + std::to_string(value) + " in cycle notation");
      seen[p] = true;
      cycle.push_back(p);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) image[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_space();
  }
  return Permutation(std::move(image));
}

std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> done(p.size(), false);
  for (Point i = 0; i < p.size(); ++i) {
    if (done[i] || p(i) == i) continue;
    out += '(';
    Point j = i;
    bool first = true;
    do {
      if (!first) out += ' ';
      first = false;
      out += std::to_string(j + 1);
      done[j] = true;
      j = p(j);
    } while (j != i);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

char generator_name(Generator g) { return static_cast<char>('a' + static_cast<int>(g)); }

GeneratorWord GeneratorWord::parse(std::string_view text) {
  GeneratorWord w;
  for (char ch : text) {
    if (ch == 'a' || ch == 'b' || ch == 'c')
      w.letters.push_back(static_cast<Generator>(ch - 'a'));
    else if (!std::isspace(static_cast<unsigned char>(ch)))
      throw Error(std::string("invalid generator letter '") + ch + "'");
  }
  return w;
}

std::string GeneratorWord::str() const {
  std::string s;
  for (Generator g : letters) s += generator_name(g);
  return s;
}

const std::array<RolePermutation, 6>& all_role_permutations() {
  static const std::array<RolePermutation, 6> roles{{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
  }};
  return roles;
}

InvolutionTriple::InvolutionTriple(Permutation a, Permutation b, Permutation c)
    : gens_{std::move(a), std::move(b), std::move(c)} {
  if (gens_[1].size() != gens_[0].size() || gens_[2].size() != gens_[0].size())
    throw Error("triple generators act on different point counts");
  if (gens_[0].size() == 0) throw Error("triple must act on at least one point");
  for (int k = 0; k < 3; ++k)
    if (!gens_[k].is_involution())
      throw Error(std::string("generator ") + static_cast<char>('a' + k) + " is not an involution");
}

InvolutionTriple InvolutionTriple::parse(std::string_view a, std::string_view b,
                                         std::string_view c, std::size_t n) {
  return InvolutionTriple(parse_cycles(a, n), parse_cycles(b, n), parse_cycles(c, n));
}

InvolutionTriple InvolutionTriple::relabeled(const Permutation& sigma) const {
  InvolutionTriple t;
  for (int k = 0; k < 3; ++k) t.gens_[k] = gens_[k].relabeled(sigma);
  return t;
}

InvolutionTriple InvolutionTriple::with_roles(const RolePermutation& roles) const {
  InvolutionTriple t;
  for (int k = 0; k < 3; ++k) t.gens_[k] = gens_[roles[k]];
  return t;
}

Permutation InvolutionTriple::product() const { return gens_[0].then(gens_[1]).then(gens_[2]); }

Permutation evaluate_word(const InvolutionTriple& t, const GeneratorWord& w) {
  Permutation result = Permutation::identity(t.n());
  for (Generator g : w.letters) result = result.then(t[g]);
  return result;
}

std::vector<std::vector<Point>> orbit_partition(const InvolutionTriple& t) {
  const std::size_t n = t.n();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Point>> orbits;
  for (Point s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Point> orbit{s};
    seen[s] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const auto& g : t.generators()) {
        Point y = g(orbit[head]);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

bool is_transitive(const InvolutionTriple& t) { return orbit_partition(t).size() == 1; }

namespace {

constexpr Point kUnlabeled = static_cast<Point>(-1);

// Breadth-first labeling of the orbit containing `start`. Fills `order` with
// the points in label order and `label` with their labels (relative to the
// orbit). Returns the relabeled image sequence a|b|c.
void traverse(const InvolutionTriple& t, Point start, std::vector<Point>& label,
              std::vector<Point>& order, std::vector<Point>& sequence) {
  order.clear();
  order.push_back(start);
  label[start] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto& g : t.generators()) {
      Point y = g(order[head]);
      if (label[y] == kUnlabeled) {
        label[y] = static_cast<Point>(order.size());
        order.push_back(y);
      }
    }
  }
  sequence.clear();
  for (const auto& g : t.generators())
    for (Point x : order) sequence.push_back(label[g(x)]);
}

}  // namespace

CanonicalForm canonicalize(const InvolutionTriple& t) {
  const std::size_t n = t.n();
  struct OrbitForm {
    std::vector<Point> order;
    std::vector<Point> sequence;
  };
  std::vector<OrbitForm> forms;

  std::vector<Point> label(n, kUnlabeled);
  std::vector<Point> order, sequence;
  for (const auto& orbit : orbit_partition(t)) {
    OrbitForm best;
    for (Point start : orbit) {
      traverse(t, start, label, order, sequence);
      if (best.order.empty() || sequence < best.sequence) {
        best.order = order;
        best.sequence = sequence;
      }
      for (Point x : order) label[x] = kUnlabeled;
    }
    forms.push_back(std::move(best));
  }

  std::stable_sort(forms.begin(), forms.end(), [](const OrbitForm& x, const OrbitForm& y) {
    if (x.order.size() != y.order.size()) return x.order.size() > y.order.size();
    return x.sequence < y.sequence;
  });

  std::vector<Point> relabel(n);
  Point next = 0;
  for (const auto& f : forms)
    for (Point x : f.order) relabel[x] = next++;

  Permutation sigma(std::move(relabel));
  return {t.relabeled(sigma), std::move(sigma)};
}

std::string encode(const InvolutionTriple& t) {
  std::string key;
  key.reserve(6 * t.n());
  for (const auto& g : t.generators()) {
    for (Point p : g.images()) {
      key += static_cast<char>(p & 0xff);
      key += static_cast<char>((p >> 8) & 0xff);
    }
  }
  return key;
}

std::string canonical_key(const InvolutionTriple& t) { return encode(canonicalize(t).triple); }

std::size_t glued_pair_count(const InvolutionTriple& t) {
  return t.a().transposition_count() + t.b().transposition_count() +
         t.c().transposition_count();
}

}  // namespace quiltforge
