#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "quiltforge/rational.hpp"
#include "quiltforge/surface.hpp"
#include "quiltforge/transplant.hpp"

namespace quiltforge {

enum class BoundaryCondition { neumann, dirichlet, twisted };
enum class AssemblyMode { graph, fem };

const char* to_string(BoundaryCondition bc);
const char* to_string(AssemblyMode mode);
BoundaryCondition parse_boundary_condition(const std::string& text);
AssemblyMode parse_assembly_mode(const std::string& text);

// Every base triangle is split into k^2 equilateral pieces. Local nodes are
// barycentric weight triples (w_ab, w_bc, w_ca) summing to k; the edge of
// color x is where the weight of the corner opposite to it vanishes. Across
// a gluing, nodes with the same weights are identified.
struct Mesh {
  GluingDiagram diagram;
  std::size_t k = 1;
  std::vector<std::array<int, 3>> local_nodes;
  std::vector<std::array<std::size_t, 3>> local_triangles;  // same orientation for all
  // vertex[i * local_nodes.size() + u]: mesh vertex of node u of triangle i,
  // numbered by first occurrence.
  std::vector<std::size_t> vertex;
  std::size_t vertex_count = 0;
  std::vector<bool> boundary;  // per mesh vertex: lies on a mirror edge

  std::size_t local_count() const { return local_nodes.size(); }
  std::size_t triangle_count() const { return diagram.n * local_triangles.size(); }
};

Mesh refine_mesh(const GluingDiagram& d, std::size_t k);

// Degrees of freedom of (triangle, local node) slots under a boundary
// condition: the slot value is sign * x[dof], or 0 when dof < 0.
//
// Neumann keeps every mesh vertex; Dirichlet drops the vertices on mirror
// edges. Twisted Dirichlet describes functions that change sign across every
// gluing (the odd part of the orientation double cover): slots are merged with
// a sign flip per gluing, and classes that meet themselves with both signs or
// touch a mirror are dropped.
struct DofMap {
  std::size_t count = 0;
  std::vector<long> dof;
  std::vector<int> sign;
};

// Dirichlet on a nonorientable diagram is rejected; use twisted instead.
DofMap dof_map(const Mesh& m, BoundaryCondition bc);

class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> data_;
};

// K x = lambda M x. Graph mode: K is the sum of the graph Laplacians of the
// subdivided base triangles and M the diagonal of slot multiplicities, so the
// pencil commutes with the triangle permutations. FEM mode: piecewise-linear
// stiffness and consistent mass on unit-edge equilateral base triangles.
struct Assembly {
  DenseMatrix stiffness;
  DenseMatrix mass;
};

Assembly assemble_laplacian(const Mesh& m, BoundaryCondition bc, AssemblyMode mode);

// Exact graph-mode stiffness and multiplicity diagonal.
struct ExactAssembly {
  RationalMatrix stiffness;
  std::vector<Rational> mass;
};

ExactAssembly assemble_exact(const Mesh& m, const DofMap& dofs);

// All eigenvalues of a symmetric matrix, ascending (cyclic Jacobi, stopping
// once the off-diagonal norm is below 1e-12 of the total norm).
std::vector<double> symmetric_eigenvalues(DenseMatrix a);

// The smallest `count` eigenvalues of a symmetric matrix or of the symmetric
// definite pencil (k, m), reduced through the Cholesky factor of m.
std::vector<double> spectrum(const DenseMatrix& a, std::size_t count);
std::vector<double> spectrum(const DenseMatrix& k, const DenseMatrix& m, std::size_t count);

struct SpectralReport {
  BoundaryCondition bc = BoundaryCondition::neumann;
  AssemblyMode mode = AssemblyMode::graph;
  std::size_t k = 1;
  std::size_t count = 0;
  double tol = 0;
  std::vector<double> left, right;
  double max_rel_deviation = 0;  // |l - r| / max(|l|, 1)

  bool passed() const { return max_rel_deviation <= tol; }
};

// The smaller of `count` and the dimension of either member is used.
SpectralReport verify_isospectrality(const InvolutionTriple& left, const InvolutionTriple& right,
                                     BoundaryCondition bc, std::size_t k, std::size_t count,
                                     double tol, AssemblyMode mode);
SpectralReport verify_isospectrality(const TransplantablePair& p, BoundaryCondition bc,
                                     std::size_t k, std::size_t count, double tol,
                                     AssemblyMode mode);

// Lifts T to the meshes (T acting on the triangle index of every slot) and
// returns the largest entry of |Pi_r Q - T Pi_l| and |M_r^-1 K_r Q - Q M_l^-1 K_l|
// with Q = M_r^-1 Pi_r^T T Pi_l, in exact graph-mode arithmetic. Zero means
// Q maps eigenvectors of the left pencil to eigenvectors of the right one.
Rational discrete_transplant_check(const InvolutionTriple& left, const InvolutionTriple& right,
                                   const RationalMatrix& t, std::size_t k,
                                   BoundaryCondition bc = BoundaryCondition::neumann);
Rational discrete_transplant_check(const TransplantablePair& p, std::size_t k,
                                   BoundaryCondition bc = BoundaryCondition::neumann);

}  // namespace quiltforge
