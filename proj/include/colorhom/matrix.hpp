#pragma once

// Small dense matrices over an exact field, with two independent elimination
// routes: Bareiss (fraction-free) for determinants and Gauss-Jordan for rank
// and inverses.

#include "colorhom/errors.hpp"
#include "colorhom/scalar.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace colorhom {

template <class S>
using Vector = std::vector<S>;

template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, S fill = S{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  template <ScalarField F>
  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  template <ScalarField F>
  static Matrix diagonal(const F& field, const std::vector<long long>& entries) {
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = field.from_int(entries[i]);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector<S> column(std::size_t c) const {
    Vector<S> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw StructuralError("matrix product: inner dimensions differ");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw StructuralError("matrix sum: shapes differ");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator*(const S& s, Matrix a) {
    for (auto& x : a.data_) x = s * x;
    return a;
  }

  friend Vector<S> operator*(const Matrix& a, const Vector<S>& x) {
    if (a.cols_ != x.size()) throw StructuralError("matrix-vector product: length mismatch");
    Vector<S> y(a.rows_);
    for (std::size_t c = 0; c < a.cols_; ++c) {
      if (is_zero(x[c])) continue;
      for (std::size_t r = 0; r < a.rows_; ++r) y[r] += a(r, c) * x[c];
    }
    return y;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

/// Bareiss fraction-free elimination. Every intermediate entry is a minor of
/// the input, so over Q the numbers stay as small as the answer allows.
template <ScalarField F>
scalar_t<F> determinant(const F& field, Matrix<scalar_t<F>> m) {
  if (!m.is_square()) throw StructuralError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return field.one();
  scalar_t<F> sign = field.one();
  scalar_t<F> prev = field.one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t swap = k + 1;
      while (swap < n && is_zero(m(swap, k))) ++swap;
      if (swap == n) return field.zero();
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) * inverse(prev);
      m(i, k) = field.zero();
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Row-reduced echelon form in place; returns the rank.
template <ScalarField F>
std::size_t row_reduce(const F& field, Matrix<scalar_t<F>>& m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && is_zero(m(pivot, c))) ++pivot;
    if (pivot == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(rank, j), m(pivot, j));
    const auto inv = inverse(m(rank, c));
    for (std::size_t j = 0; j < m.cols(); ++j) m(rank, j) = m(rank, j) * inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || is_zero(m(r, c))) continue;
      const auto f = m(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) -= f * m(rank, j);
    }
    ++rank;
  }
  (void)field;
  return rank;
}

template <ScalarField F>
std::size_t rank(const F& field, Matrix<scalar_t<F>> m) {
  return row_reduce(field, m);
}

/// Gauss-Jordan on [M | I]; nullopt when M is singular.
template <ScalarField F>
std::optional<Matrix<scalar_t<F>>> try_inverse(const F& field, const Matrix<scalar_t<F>>& m) {
  if (!m.is_square()) throw StructuralError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<scalar_t<F>> aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = field.one();
  }
  if (row_reduce(field, aug) < n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    if (is_zero(aug(i, i))) return std::nullopt;
  Matrix<scalar_t<F>> inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

template <class S>
bool is_zero_vector(const Vector<S>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

template <class S>
Vector<S> operator+(Vector<S> a, const Vector<S>& b) {
  if (a.size() != b.size()) throw StructuralError("vector sum: length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class S>
Vector<S> operator-(Vector<S> a, const Vector<S>& b) {
  if (a.size() != b.size()) throw StructuralError("vector difference: length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class S>
Vector<S> scale(const S& s, Vector<S> a) {
  for (auto& x : a) x = s * x;
  return a;
}

}  // namespace colorhom
