#include "quiltforge/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <set>

namespace quiltforge {

const char* to_string(BoundaryCondition bc) {
  switch (bc) {
    case BoundaryCondition::neumann: return "neumann";
    case BoundaryCondition::dirichlet: return "dirichlet";
    case BoundaryCondition::twisted: return "twisted";
  }
  return "?";
}

const char* to_string(AssemblyMode mode) {
  return mode == AssemblyMode::graph ? "graph" : "fem";
}

BoundaryCondition parse_boundary_condition(const std::string& text) {
  if (text == "neumann") return BoundaryCondition::neumann;
  if (text == "dirichlet") return BoundaryCondition::dirichlet;
  if (text == "twisted") return BoundaryCondition::twisted;
  throw Error("unknown boundary condition '" + text + "'");
}

AssemblyMode parse_assembly_mode(const std::string& text) {
  if (text == "graph") return AssemblyMode::graph;
  if (text == "fem") return AssemblyMode::fem;
  throw Error("unknown assembly mode '" + text + "'");
}

namespace {

// Union-find over slots; parity[i] is the sign relation to the parent.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(std::size_t n) : parent_(n), parity_(n, 0), conflict_(n, false) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }

  std::pair<std::size_t, int> find(std::size_t i) {
    int par = 0;
    std::size_t root = i;
    while (parent_[root] != root) {
      par ^= parity_[root];
      root = parent_[root];
    }
    // Path compression keeping parities consistent.
    int acc = par;
    while (parent_[i] != root) {
      std::size_t next = parent_[i];
      int step = parity_[i];
      parent_[i] = root;
      parity_[i] = acc;
      acc ^= step;
      i = next;
    }
    return {root, par};
  }

  void unite(std::size_t i, std::size_t j, int parity) {
    auto [ri, pi] = find(i);
    auto [rj, pj] = find(j);
    if (ri == rj) {
      if ((pi ^ pj) != parity) conflict_[ri] = true;
      return;
    }
    parent_[rj] = ri;
    parity_[rj] = pi ^ pj ^ parity;
    conflict_[ri] = conflict_[ri] || conflict_[rj];
  }

  bool conflicted(std::size_t i) { return conflict_[find(i).first]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> parity_;
  std::vector<bool> conflict_;
};

// Slots on the edge of color x: the weight of the opposite corner is zero.
bool on_edge(const std::array<int, 3>& w, int x) { return w[(x + 1) % 3] == 0; }

ParityUnionFind glue_slots(const Mesh& m, int parity) {
  const std::size_t loc = m.local_count();
  ParityUnionFind uf(m.diagram.n * loc);
  for (int x = 0; x < 3; ++x)
    for (Point i = 0; i < m.diagram.n; ++i) {
      Point j = m.diagram.partner[x][i];
      if (j <= i) continue;
      for (std::size_t u = 0; u < loc; ++u)
        if (on_edge(m.local_nodes[u], x)) uf.unite(i * loc + u, j * loc + u, parity);
    }
  return uf;
}

bool on_mirror(const Mesh& m, Point i, std::size_t u) {
  for (int x = 0; x < 3; ++x)
    if (m.diagram.partner[x][i] == i && on_edge(m.local_nodes[u], x)) return true;
  return false;
}

}  // namespace

Mesh refine_mesh(const GluingDiagram& d, std::size_t k) {
  if (k < 1) throw Error("refinement depth must be at least 1");
  Mesh m;
  m.diagram = d;
  m.k = k;
  const int K = static_cast<int>(k);
  std::vector<std::vector<std::size_t>> index(k + 1, std::vector<std::size_t>(k + 1));
  for (int p = 0; p <= K; ++p)
    for (int q = 0; q <= K - p; ++q) {
      index[p][q] = m.local_nodes.size();
      m.local_nodes.push_back({p, q, K - p - q});
    }
  for (int p = 0; p < K; ++p)
    for (int q = 0; q < K - p; ++q)
      m.local_triangles.push_back({index[p + 1][q], index[p][q + 1], index[p][q]});
  for (int p = 0; p + 1 < K; ++p)
    for (int q = 0; q + 1 < K - p; ++q)
      m.local_triangles.push_back({index[p][q + 1], index[p + 1][q], index[p + 1][q + 1]});

  const std::size_t loc = m.local_count();
  ParityUnionFind uf = glue_slots(m, 0);
  std::vector<std::size_t> root_vertex(d.n * loc, SIZE_MAX);
  m.vertex.resize(d.n * loc);
  for (std::size_t s = 0; s < d.n * loc; ++s) {
    std::size_t r = uf.find(s).first;
    if (root_vertex[r] == SIZE_MAX) root_vertex[r] = m.vertex_count++;
    m.vertex[s] = root_vertex[r];
  }
  m.boundary.assign(m.vertex_count, false);
  for (Point i = 0; i < d.n; ++i)
    for (std::size_t u = 0; u < loc; ++u)
      if (on_mirror(m, i, u)) m.boundary[m.vertex[i * loc + u]] = true;
  return m;
}

DofMap dof_map(const Mesh& m, BoundaryCondition bc) {
  if (bc == BoundaryCondition::dirichlet && !orientable_by_cycle_parity(m.diagram))
    throw Error("dirichlet conditions need an orientable diagram; use twisted");
  const std::size_t loc = m.local_count();
  const std::size_t slots = m.diagram.n * loc;
  ParityUnionFind uf = glue_slots(m, bc == BoundaryCondition::twisted ? 1 : 0);

  std::vector<bool> dropped(slots, false);  // by root
  if (bc != BoundaryCondition::neumann) {
    for (Point i = 0; i < m.diagram.n; ++i)
      for (std::size_t u = 0; u < loc; ++u)
        if (on_mirror(m, i, u)) dropped[uf.find(i * loc + u).first] = true;
    for (std::size_t s = 0; s < slots; ++s)
      if (uf.conflicted(s)) dropped[uf.find(s).first] = true;
  }

  DofMap map;
  map.dof.assign(slots, -1);
  map.sign.assign(slots, 0);
  std::vector<long> root_dof(slots, -1);
  std::vector<int> root_sign(slots, 0);
  for (std::size_t s = 0; s < slots; ++s) {
    auto [r, par] = uf.find(s);
    if (dropped[r]) continue;
    if (root_dof[r] < 0) {
      root_dof[r] = static_cast<long>(map.count++);
      root_sign[r] = par;  // the first slot of a class gets sign +1
    }
    map.dof[s] = root_dof[r];
    map.sign[s] = (par ^ root_sign[r]) ? -1 : 1;
  }
  return map;
}

namespace {

// Per-base-triangle matrices on the local nodes.
struct LocalMatrices {
  std::vector<std::vector<double>> a, b;
};

LocalMatrices local_matrices(const Mesh& m, AssemblyMode mode) {
  const std::size_t loc = m.local_count();
  LocalMatrices l{std::vector<std::vector<double>>(loc, std::vector<double>(loc, 0.0)),
                  std::vector<std::vector<double>>(loc, std::vector<double>(loc, 0.0))};
  if (mode == AssemblyMode::graph) {
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& t : m.local_triangles)
      for (int e = 0; e < 3; ++e) {
        std::size_t u = t[e], v = t[(e + 1) % 3];
        edges.insert({std::min(u, v), std::max(u, v)});
      }
    for (auto [u, v] : edges) {
      l.a[u][u] += 1;
      l.a[v][v] += 1;
      l.a[u][v] -= 1;
      l.a[v][u] -= 1;
    }
    for (std::size_t u = 0; u < loc; ++u) l.b[u][u] = 1;
    return l;
  }
  const double h = 1.0 / static_cast<double>(m.k);
  const double area = std::sqrt(3.0) / 4.0 * h * h;
  const double off = -1.0 / (2.0 * std::sqrt(3.0));
  for (const auto& t : m.local_triangles)
    for (int e = 0; e < 3; ++e)
      for (int f = 0; f < 3; ++f) {
        l.a[t[e]][t[f]] += e == f ? -2.0 * off : off;
        l.b[t[e]][t[f]] += area / 12.0 * (e == f ? 2.0 : 1.0);
      }
  return l;
}

}  // namespace

Assembly assemble_laplacian(const Mesh& m, BoundaryCondition bc, AssemblyMode mode) {
  const DofMap dofs = dof_map(m, bc);
  const LocalMatrices l = local_matrices(m, mode);
  const std::size_t loc = m.local_count();
  Assembly out{DenseMatrix(dofs.count, dofs.count), DenseMatrix(dofs.count, dofs.count)};
  for (Point i = 0; i < m.diagram.n; ++i)
    for (std::size_t u = 0; u < loc; ++u) {
      long du = dofs.dof[i * loc + u];
      if (du < 0) continue;
      for (std::size_t v = 0; v < loc; ++v) {
        long dv = dofs.dof[i * loc + v];
        if (dv < 0) continue;
        double s = dofs.sign[i * loc + u] * dofs.sign[i * loc + v];
        out.stiffness(du, dv) += s * l.a[u][v];
        out.mass(du, dv) += s * l.b[u][v];
      }
    }
  return out;
}

ExactAssembly assemble_exact(const Mesh& m, const DofMap& dofs) {
  const LocalMatrices l = local_matrices(m, AssemblyMode::graph);
  const std::size_t loc = m.local_count();
  ExactAssembly out{RationalMatrix(dofs.count, dofs.count), std::vector<Rational>(dofs.count, 0)};
  for (Point i = 0; i < m.diagram.n; ++i)
    for (std::size_t u = 0; u < loc; ++u) {
      long du = dofs.dof[i * loc + u];
      if (du < 0) continue;
      out.mass[du] += 1;
      for (std::size_t v = 0; v < loc; ++v) {
        long dv = dofs.dof[i * loc + v];
        if (dv < 0 || l.a[u][v] == 0) continue;
        out.stiffness(du, dv) +=
            Rational(static_cast<long>(l.a[u][v]) * dofs.sign[i * loc + u] * dofs.sign[i * loc + v]);
      }
    }
  return out;
}

std::vector<double> symmetric_eigenvalues(DenseMatrix a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw Error("eigenvalues need a square matrix");
  double total = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) total += a(i, j) * a(i, j);
  const double threshold = 1e-12 * std::sqrt(total);

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += 2 * a(i, j) * a(i, j);
    if (std::sqrt(off) <= threshold) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        double apq = a(p, q);
        if (apq == 0) continue;
        double theta = (a(q, q) - a(p, p)) / (2 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1);
        double s = t * c;
        for (std::size_t r = 0; r < n; ++r) {
          double arp = a(r, p), arq = a(r, q);
          a(r, p) = c * arp - s * arq;
          a(r, q) = s * arp + c * arq;
        }
        for (std::size_t r = 0; r < n; ++r) {
          double apr = a(p, r), aqr = a(q, r);
          a(p, r) = c * apr - s * aqr;
          a(q, r) = s * apr + c * aqr;
        }
        a(p, q) = a(q, p) = 0;
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

namespace {

void require_symmetric(const DenseMatrix& a) {
  if (a.rows() != a.cols()) throw Error("matrix is not square");
  double scale = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) scale = std::max(scale, std::fabs(a(i, j)));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (std::fabs(a(i, j) - a(j, i)) > 1e-12 * std::max(scale, 1.0))
        throw Error("matrix is not symmetric");
}

std::vector<double> smallest(std::vector<double> ev, std::size_t count) {
  if (count > ev.size())
    throw Error("requested " + std::to_string(count) + " eigenvalues of a " +
                std::to_string(ev.size()) + "-dimensional problem");
  ev.resize(count);
  return ev;
}

}  // namespace

std::vector<double> spectrum(const DenseMatrix& a, std::size_t count) {
  require_symmetric(a);
  if (count > a.rows()) return smallest({}, count);
  return smallest(symmetric_eigenvalues(a), count);
}

std::vector<double> spectrum(const DenseMatrix& k, const DenseMatrix& m, std::size_t count) {
  require_symmetric(k);
  require_symmetric(m);
  const std::size_t n = k.rows();
  if (m.rows() != n) throw Error("stiffness and mass sizes differ");
  if (count > n) return smallest({}, count);

  DenseMatrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = m(j, j);
    for (std::size_t r = 0; r < j; ++r) d -= l(j, r) * l(j, r);
    if (d <= 0) throw Error("mass matrix is not positive definite");
    l(j, j) = std::sqrt(d);
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = m(i, j);
      for (std::size_t r = 0; r < j; ++r) s -= l(i, r) * l(j, r);
      l(i, j) = s / l(j, j);
    }
  }
  // x = L^-1 k, then c = L^-1 x^T.
  auto forward = [&](const DenseMatrix& b) {
    DenseMatrix x(n, n);
    for (std::size_t col = 0; col < n; ++col)
      for (std::size_t i = 0; i < n; ++i) {
        double s = b(i, col);
        for (std::size_t r = 0; r < i; ++r) s -= l(i, r) * x(r, col);
        x(i, col) = s / l(i, i);
      }
    return x;
  };
  DenseMatrix x = forward(k);
  DenseMatrix xt(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) xt(i, j) = x(j, i);
  DenseMatrix c = forward(xt);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) c(i, j) = c(j, i) = 0.5 * (c(i, j) + c(j, i));
  return smallest(symmetric_eigenvalues(std::move(c)), count);
}

SpectralReport verify_isospectrality(const InvolutionTriple& left, const InvolutionTriple& right,
                                     BoundaryCondition bc, std::size_t k, std::size_t count,
                                     double tol, AssemblyMode mode) {
  Assembly l = assemble_laplacian(refine_mesh(build_diagram(left), k), bc, mode);
  Assembly r = assemble_laplacian(refine_mesh(build_diagram(right), k), bc, mode);
  SpectralReport report;
  report.bc = bc;
  report.mode = mode;
  report.k = k;
  report.tol = tol;
  report.count = std::min({count, l.stiffness.rows(), r.stiffness.rows()});
  report.left = spectrum(l.stiffness, l.mass, report.count);
  report.right = spectrum(r.stiffness, r.mass, report.count);
  if (l.stiffness.rows() != r.stiffness.rows())
    report.max_rel_deviation = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < report.count; ++i) {
    double dev = std::fabs(report.left[i] - report.right[i]) /
                 std::max(std::fabs(report.left[i]), 1.0);
    report.max_rel_deviation = std::max(report.max_rel_deviation, dev);
  }
  return report;
}

SpectralReport verify_isospectrality(const TransplantablePair& p, BoundaryCondition bc,
                                     std::size_t k, std::size_t count, double tol,
                                     AssemblyMode mode) {
  return verify_isospectrality(p.left(), p.right(), bc, k, count, tol, mode);
}

namespace {

Rational transplant_residual(const Mesh& ml, const Mesh& mr, const RationalMatrix& t,
                             BoundaryCondition bc);

// 0/1 face coloring with glued faces on opposite sides; requires orientability.
std::vector<int> face_sides(const GluingDiagram& d) {
  std::vector<int> side(d.n, -1);
  for (Point root = 0; root < d.n; ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    std::vector<Point> stack{root};
    while (!stack.empty()) {
      Point i = stack.back();
      stack.pop_back();
      for (const auto& p : d.partner)
        if (side[p[i]] < 0) {
          side[p[i]] = 1 - side[i];
          stack.push_back(p[i]);
        }
    }
  }
  return side;
}

}  // namespace

Rational discrete_transplant_check(const InvolutionTriple& left, const InvolutionTriple& right,
                                   const RationalMatrix& t, std::size_t k, BoundaryCondition bc) {
  const std::size_t n = left.n();
  if (right.n() != n || t.rows() != n || t.cols() != n)
    throw Error("intertwiner size does not match the pair");
  Mesh ml = refine_mesh(build_diagram(left), k);
  Mesh mr = refine_mesh(build_diagram(right), k);
  if (bc == BoundaryCondition::dirichlet) {
    // Plain Dirichlet is the twisted problem conjugated by the face
    // two-colorings, so T is conjugated the same way.
    auto sl = face_sides(ml.diagram);
    auto sr = face_sides(mr.diagram);
    RationalMatrix signed_t = t;
    for (Point j = 0; j < n; ++j)
      for (Point i = 0; i < n; ++i)
        if (sl[i] != sr[j]) signed_t(j, i) = -signed_t(j, i);
    return transplant_residual(ml, mr, signed_t, bc);
  }
  return transplant_residual(ml, mr, t, bc);
}

namespace {

Rational transplant_residual(const Mesh& ml, const Mesh& mr, const RationalMatrix& t,
                             BoundaryCondition bc) {
  const std::size_t n = ml.diagram.n;
  if (ml.local_count() != mr.local_count()) throw Error("meshes use different local numbering");
  const std::size_t loc = ml.local_count();
  DofMap dl = dof_map(ml, bc);
  DofMap dr = dof_map(mr, bc);
  ExactAssembly el = assemble_exact(ml, dl);
  ExactAssembly er = assemble_exact(mr, dr);

  // (T Pi_l) row for slot (j, u) of the right mesh.
  auto lifted_row = [&](Point j, std::size_t u) {
    std::vector<Rational> row(dl.count, 0);
    for (Point i = 0; i < n; ++i) {
      if (t(j, i) == 0) continue;
      long d = dl.dof[i * loc + u];
      if (d >= 0) row[d] += t(j, i) * dl.sign[i * loc + u];
    }
    return row;
  };

  RationalMatrix q(dr.count, dl.count);
  for (Point j = 0; j < n; ++j)
    for (std::size_t u = 0; u < loc; ++u) {
      long d = dr.dof[j * loc + u];
      if (d < 0) continue;
      auto row = lifted_row(j, u);
      for (std::size_t c = 0; c < dl.count; ++c)
        if (row[c] != 0) q(d, c) += row[c] * dr.sign[j * loc + u];
    }
  for (std::size_t r = 0; r < dr.count; ++r)
    for (std::size_t c = 0; c < dl.count; ++c) q(r, c) /= er.mass[r];

  Rational residual = 0;
  auto note = [&](const Rational& x) {
    Rational a = abs(x);
    if (a > residual) residual = a;
  };
  for (Point j = 0; j < n; ++j)
    for (std::size_t u = 0; u < loc; ++u) {
      long d = dr.dof[j * loc + u];
      auto row = lifted_row(j, u);
      for (std::size_t c = 0; c < dl.count; ++c) {
        Rational lhs = d >= 0 ? Rational(q(d, c) * dr.sign[j * loc + u]) : Rational(0);
        note(lhs - row[c]);
      }
    }

  // M_r^-1 K_r Q against Q M_l^-1 K_l.
  for (std::size_t r = 0; r < dr.count; ++r)
    for (std::size_t c = 0; c < dl.count; ++c) {
      Rational lhs = 0, rhs = 0;
      for (std::size_t s = 0; s < dr.count; ++s)
        if (er.stiffness(r, s) != 0 && q(s, c) != 0) lhs += er.stiffness(r, s) * q(s, c);
      lhs /= er.mass[r];
      for (std::size_t s = 0; s < dl.count; ++s)
        if (q(r, s) != 0 && el.stiffness(s, c) != 0) rhs += q(r, s) * el.stiffness(s, c) / el.mass[s];
      note(lhs - rhs);
    }
  return residual;
}

}  // namespace

Rational discrete_transplant_check(const TransplantablePair& p, std::size_t k,
                                   BoundaryCondition bc) {
  return discrete_transplant_check(p.left(), p.right(), p.intertwiner(), k, bc);
}

}  // namespace quiltforge
