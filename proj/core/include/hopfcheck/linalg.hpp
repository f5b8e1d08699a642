#pragma once

// Dense exact linear algebra over an ExactRing.
//
// Row reduction only ever divides by pivots for which try_invert succeeds.
// Over the fields that is every nonzero entry; over polynomial rings it is the
// nonzero constants. A column whose only candidate pivots are nonconstant
// polynomials raises NeedsSpecialization instead of guessing.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfcheck/scalars.hpp"

namespace hopfcheck {

class NeedsSpecialization : public std::runtime_error {
 public:
  NeedsSpecialization()
      : std::runtime_error("row reduction needs a nonconstant pivot; specialize the parameters") {}
};

template <ExactRing S>
using Vec = std::vector<S>;

template <ExactRing S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S::zero()) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S::one();
    return m;
  }
  static Matrix from_rows(const std::vector<Vec<S>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec<S> row(std::size_t r) const { return Vec<S>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }
  Vec<S> column(std::size_t c) const {
    Vec<S> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
        }
      }
    }
    return m;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  Vec<S> apply(const Vec<S>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    Vec<S> out(rows_, S::zero());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (!v[c].is_zero() && !(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
    return out;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (!((*this)(r, c) == (r == c ? S::one() : S::zero()))) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
template <ExactRing S>
std::vector<std::size_t> row_reduce(Matrix<S>& m) {
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < m.cols() && prow < m.rows(); ++c) {
    std::optional<std::size_t> chosen;
    std::optional<S> inv;
    bool saw_nonzero = false;
    for (std::size_t r = prow; r < m.rows(); ++r) {
      if (m(r, c).is_zero()) continue;
      saw_nonzero = true;
      if (auto i = try_invert(m(r, c))) {
        chosen = r;
        inv = std::move(i);
        break;
      }
    }
    if (!chosen) {
      if (saw_nonzero) throw NeedsSpecialization();
      continue;
    }
    if (*chosen != prow) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(prow, j), m(*chosen, j));
    }
    for (std::size_t j = c; j < m.cols(); ++j) m(prow, j) = m(prow, j) * *inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == prow || m(r, c).is_zero()) continue;
      S f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(prow, j).is_zero()) m(r, j) -= f * m(prow, j);
      }
    }
    pivots.push_back(c);
    ++prow;
  }
  return pivots;
}

template <ExactRing S>
std::size_t rank(Matrix<S> m) {
  return row_reduce(m).size();
}

template <ExactRing S>
std::size_t rank_of(const std::vector<Vec<S>>& vectors, std::size_t dim) {
  if (vectors.empty()) return 0;
  return rank(Matrix<S>::from_rows(vectors, dim));
}

/// Basis of {x : m x = 0}.
template <ExactRing S>
std::vector<Vec<S>> nullspace(Matrix<S> m) {
  auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec<S>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<S> v(m.cols(), S::zero());
    v[free] = S::one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// True iff v lies in the span of the given vectors.
template <ExactRing S>
bool in_span(const std::vector<Vec<S>>& spanning, const Vec<S>& v, std::size_t dim) {
  std::size_t r0 = rank_of(spanning, dim);
  auto ext = spanning;
  ext.push_back(v);
  return rank_of(ext, dim) == r0;
}

/// Coordinates of v in terms of linearly independent vectors, if v is in their span.
template <ExactRing S>
std::optional<Vec<S>> solve_coordinates(const std::vector<Vec<S>>& independent, const Vec<S>& v, std::size_t dim) {
  // Columns are the basis vectors; last column is v.
  Matrix<S> m(dim, independent.size() + 1);
  for (std::size_t j = 0; j < independent.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = independent[j][i];
  for (std::size_t i = 0; i < dim; ++i) m(i, independent.size()) = v[i];
  auto pivots = row_reduce(m);
  if (!pivots.empty() && pivots.back() == independent.size()) return std::nullopt;
  if (pivots.size() != independent.size()) throw std::invalid_argument("solve_coordinates: vectors are dependent");
  Vec<S> coords(independent.size(), S::zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) coords[pivots[i]] = m(i, independent.size());
  return coords;
}

/// Inverse of a square matrix when its row reduction succeeds with invertible pivots.
template <ExactRing S>
std::optional<Matrix<S>> inverse(const Matrix<S>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
  std::size_t n = a.rows();
  Matrix<S> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = S::one();
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<S> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

}  // namespace hopfcheck
