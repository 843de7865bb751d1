#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "quiltforge/perm.hpp"

namespace quiltforge {

using Rational = mpq_class;

// "p/q" with q > 0; integers print as "p/1".
std::string to_fraction_string(const Rational& r);
Rational parse_fraction(const std::string& text);

// Dense matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);
  // P with P e_j = e_{p(j)}.
  static RationalMatrix permutation_matrix(const Permutation& p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix operator*(const RationalMatrix& rhs) const;
  RationalMatrix operator+(const RationalMatrix& rhs) const;
  RationalMatrix operator-(const RationalMatrix& rhs) const;
  RationalMatrix scaled(const Rational& s) const;
  RationalMatrix transposed() const;

  bool operator==(const RationalMatrix& rhs) const;
  bool is_zero() const;
  // Largest absolute entry.
  Rational max_abs() const;

  // T * P(p), computed by column permutation.
  RationalMatrix times_permutation(const Permutation& p) const;
  // P(p) * T, computed by row permutation.
  RationalMatrix permutation_times(const Permutation& p) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Exact determinant by Gaussian elimination over the rationals.
Rational determinant(const RationalMatrix& m);

// A sparse row of a linear system: (column, coefficient) pairs sorted by
// column, no zero coefficients.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

// Basis of { x : row . x = 0 for every row } over the rationals, computed by
// exact sparse elimination. One vector per free column, in increasing order of
// that column; each vector has a 1 at its free column.
std::vector<std::vector<Rational>> null_space(const std::vector<SparseRow>& rows,
                                              std::size_t unknowns);

}  // namespace quiltforge
