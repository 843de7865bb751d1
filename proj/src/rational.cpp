#include "quiltforge/rational.hpp"

#include <map>

namespace quiltforge {

std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_fraction(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw Error("invalid rational '" + text + "'");
  if (r.get_den() == 0) throw Error("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::permutation_matrix(const Permutation& p) {
  RationalMatrix m(p.size(), p.size());
  for (std::size_t j = 0; j < p.size(); ++j) m(p(static_cast<Point>(j)), j) = 1;
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error("matrix product dimension mismatch");
  RationalMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& x = (*this)(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Rational& y = rhs(k, j);
        if (y != 0) out(i, j) += x * y;
      }
    }
  }
  return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error("matrix sum dimension mismatch");
  RationalMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error("matrix difference dimension mismatch");
  RationalMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

RationalMatrix RationalMatrix::scaled(const Rational& s) const {
  RationalMatrix out(*this);
  for (auto& x : out.data_) x *= s;
  return out;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool RationalMatrix::operator==(const RationalMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

Rational RationalMatrix::max_abs() const {
  Rational best = 0;
  for (const auto& x : data_) {
    Rational a = abs(x);
    if (a > best) best = a;
  }
  return best;
}

RationalMatrix RationalMatrix::times_permutation(const Permutation& p) const {
  if (p.size() != cols_) throw Error("permutation size mismatch");
  RationalMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, p(static_cast<Point>(j)));
  return out;
}

RationalMatrix RationalMatrix::permutation_times(const Permutation& p) const {
  if (p.size() != rows_) throw Error("permutation size mismatch");
  RationalMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(p(static_cast<Point>(i)), j) = (*this)(i, j);
  return out;
}

Rational determinant(const RationalMatrix& input) {
  if (input.rows() != input.cols()) throw Error("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  RationalMatrix m = input;
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    const Rational p = m(col, col);
    det *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      Rational f = m(r, col) / p;
      for (std::size_t j = col; j < n; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return det;
}

namespace {

// row -= factor * other, both sorted sparse rows.
SparseRow axpy(const SparseRow& row, const Rational& factor, const SparseRow& other) {
  SparseRow out;
  out.reserve(row.size() + other.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < other.size()) {
    if (j == other.size() || (i < row.size() && row[i].first < other[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || other[j].first < row[i].first) {
      out.emplace_back(other[j].first, -factor * other[j].second);
      ++j;
    } else {
      Rational v = row[i].second - factor * other[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<Rational>> null_space(const std::vector<SparseRow>& rows,
                                              std::size_t unknowns) {
  // Echelon form keyed by pivot column; every stored row starts with a 1.
  std::map<std::size_t, SparseRow> pivots;
  for (SparseRow row : rows) {
    for (const auto& [col, v] : row)
      if (col >= unknowns) throw Error("equation refers to an unknown out of range");
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      Rational f = row.front().second;
      row = axpy(row, f, it->second);
    }
    if (row.empty()) continue;
    Rational lead = row.front().second;
    for (auto& [col, v] : row) v /= lead;
    pivots.emplace(row.front().first, std::move(row));
  }

  // Back substitution, highest pivot first, so every row ends up free of
  // other pivot columns.
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    SparseRow& row = it->second;
    std::size_t pos = 1;
    while (pos < row.size()) {
      auto other = pivots.find(row[pos].first);
      if (other == pivots.end()) {
        ++pos;
        continue;
      }
      Rational f = row[pos].second;
      std::size_t col = row[pos].first;
      row = axpy(row, f, other->second);
      pos = 1;
      while (pos < row.size() && row[pos].first <= col) ++pos;
    }
  }

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < unknowns; ++free) {
    if (pivots.count(free)) continue;
    std::vector<Rational> v(unknowns);
    v[free] = 1;
    for (const auto& [p, row] : pivots) {
      for (const auto& [col, coeff] : row) {
        if (col == free) {
          v[p] = -coeff;
          break;
        }
        if (col > free) break;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace quiltforge
