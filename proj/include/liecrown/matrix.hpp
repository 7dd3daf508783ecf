#pragma once
// Dense vectors and matrices over an exact field, and reduced row-echelon form.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "liecrown/error.hpp"
#include "liecrown/field.hpp"

namespace liecrown {

template <class F>
using Vector = std::vector<typename F::Element>;

template <class F>
Vector<F> zero_vector(const F& field, std::size_t n) {
  return Vector<F>(n, field.zero());
}

template <class F>
Vector<F> unit_vector(const F& field, std::size_t n, std::size_t i) {
  Vector<F> v(n, field.zero());
  v[i] = field.one();
  return v;
}

template <class E>
bool is_zero_vector(const std::vector<E>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

// y += a * x
template <class E>
void axpy(std::vector<E>& y, const E& a, const std::vector<E>& x) {
  if (is_zero(a)) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!is_zero(x[i])) y[i] += a * x[i];
}

template <class E>
std::vector<E> add(std::vector<E> a, const std::vector<E>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class E>
std::vector<E> sub(std::vector<E> a, const std::vector<E>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class E>
std::vector<E> scale(std::vector<E> a, const E& s) {
  for (auto& x : a) x *= s;
  return a;
}

template <class F>
class Matrix {
 public:
  using Element = typename F::Element;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(const F& field, std::size_t cols, const std::vector<Vector<F>>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw DimensionMismatch("row length differs from column count");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  static Matrix from_columns(const F& field, std::size_t rows, const std::vector<Vector<F>>& cols) {
    Matrix m(field, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != rows) throw DimensionMismatch("column length differs from row count");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector<F> row(std::size_t r) const {
    return Vector<F>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  Vector<F> col(std::size_t c) const {
    Vector<F> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }

  /// Matrix-vector product M v.
  Vector<F> apply(const Vector<F>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
    Vector<F> out(rows_, field_.zero());
    for (std::size_t c = 0; c < cols_; ++c) {
      if (is_zero(v[c])) continue;
      for (std::size_t r = 0; r < rows_; ++r) {
        const Element& a = (*this)(r, c);
        if (!is_zero(a)) out[r] += a * v[c];
      }
    }
    return out;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product size mismatch");
    Matrix out(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Element& x = a(i, k);
        if (is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!is_zero(b(k, j))) out(i, j) += x * b(k, j);
      }
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  Matrix scaled(const Element& s) const {
    Matrix m = *this;
    for (auto& x : m.data_) x *= s;
    return m;
  }

  bool is_zero_matrix() const { return is_zero_vector(data_); }

  /// Entries in row-major order; a matrix viewed as a vector of length rows*cols.
  const std::vector<Element>& entries() const { return data_; }
  static Matrix from_entries(const F& field, std::size_t rows, std::size_t cols,
                             const Vector<F>& entries) {
    if (entries.size() != rows * cols) throw DimensionMismatch("entry count mismatch");
    Matrix m(field, rows, cols);
    m.data_ = entries;
    return m;
  }

  Element trace() const {
    Element t = field_.zero();
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionMismatch("matrix shapes differ");
  }

  F field_;
  std::size_t rows_, cols_;
  std::vector<Element> data_;
};

template <class F>
struct Rref {
  Matrix<F> matrix;                 // full size, zero rows at the bottom
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

/// Canonical reduced row-echelon form by Gauss-Jordan elimination.
template <class F>
Rref<F> rref(Matrix<F> m) {
  using E = typename F::Element;
  const F& field = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && is_zero(m(sel, c))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(sel, k), m(r, k));
    E inv = field.one() / m(r, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(r, k) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      E f = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (!is_zero(m(r, k))) m(i, k) -= f * m(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).rank();
}

/// Basis of ker(A) = {x : A x = 0}, one vector per free column, in column order.
template <class F>
std::vector<Vector<F>> kernel_basis(const Matrix<F>& a) {
  const F& field = a.field();
  Rref<F> red = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<Vector<F>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector<F> x = zero_vector(field, a.cols());
    x[free] = field.one();
    for (std::size_t r = 0; r < red.pivots.size(); ++r) x[red.pivots[r]] = -red.matrix(r, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

template <class F>
typename F::Element determinant(Matrix<F> m) {
  using E = typename F::Element;
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
  const F& field = m.field();
  E det = field.one();
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && is_zero(m(sel, c))) ++sel;
    if (sel == n) return field.zero();
    if (sel != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(sel, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    E inv = field.one() / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      E f = m(i, c) * inv;
      for (std::size_t k = c; k < n; ++k) m(i, k) -= f * m(c, k);
    }
  }
  return det;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  Matrix<F> aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.field().one();
  }
  Rref<F> red = rref(aug);
  if (red.rank() < n || red.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<F> inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = red.matrix(i, n + j);
  return inv;
}

}  // namespace liecrown
