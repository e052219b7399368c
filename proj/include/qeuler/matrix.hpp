#pragma once

#include <cassert>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace qeuler {

/// Dense row-major matrix over an exact field (Rational or RationalFunction).
template <class Field>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Field(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Field(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Field& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Field& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Field> column(std::size_t c) const {
    std::vector<Field> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  Field trace() const {
    Field t(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Field& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) m(i, j) += aik * b(k, j);
      }
    return m;
  }

  friend std::vector<Field> operator*(const Matrix& a, std::span<const Field> v) {
    assert(a.cols_ == v.size());
    std::vector<Field> out(a.rows_, Field(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Field> data_;
};

namespace detail {

/// Gauss-Jordan reduction of [a | rhs] over a field. Returns the determinant
/// of `a`; when nonzero `rhs` is overwritten with a^{-1} * rhs.
template <class Field>
Field eliminate(Matrix<Field> a, Matrix<Field>* rhs) {
  const std::size_t n = a.rows();
  assert(a.cols() == n);
  Field det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Field(0);
    if (pivot != col) {
      det = -det;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      if (rhs)
        for (std::size_t c = 0; c < rhs->cols(); ++c) std::swap((*rhs)(pivot, c), (*rhs)(col, c));
    }
    const Field p = a(col, col);
    det *= p;
    const Field inv = Field(1) / p;
    for (std::size_t c = col; c < n; ++c) a(col, c) *= inv;
    if (rhs)
      for (std::size_t c = 0; c < rhs->cols(); ++c) (*rhs)(col, c) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const Field factor = a(r, col);
      for (std::size_t c = col; c < n; ++c)
        if (!a(col, c).is_zero()) a(r, c) -= factor * a(col, c);
      if (rhs)
        for (std::size_t c = 0; c < rhs->cols(); ++c)
          if (!(*rhs)(col, c).is_zero()) (*rhs)(r, c) -= factor * (*rhs)(col, c);
    }
  }
  return det;
}

}  // namespace detail

template <class Field>
Field determinant(const Matrix<Field>& a) {
  return detail::eliminate<Field>(a, nullptr);
}

/// Solves a * X = rhs; nullopt when a is singular.
template <class Field>
std::optional<Matrix<Field>> solve(const Matrix<Field>& a, Matrix<Field> rhs) {
  if (detail::eliminate<Field>(a, &rhs).is_zero()) return std::nullopt;
  return rhs;
}

template <class Field>
std::optional<std::vector<Field>> solve(const Matrix<Field>& a, std::span<const Field> b) {
  Matrix<Field> rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  auto x = solve(a, std::move(rhs));
  if (!x) return std::nullopt;
  return x->column(0);
}

template <class Field>
std::optional<Matrix<Field>> inverse(const Matrix<Field>& a) {
  return solve(a, Matrix<Field>::identity(a.rows()));
}

template <class Field>
Matrix<Field> power(Matrix<Field> base, unsigned exponent) {
  Matrix<Field> result = Matrix<Field>::identity(base.rows());
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent) base = base * base;
  }
  return result;
}

}  // namespace qeuler
