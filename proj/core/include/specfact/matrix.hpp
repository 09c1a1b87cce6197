/*
   Copyright 2026 The specfact Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#ifndef SPECFACT_MATRIX_HPP
#define SPECFACT_MATRIX_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "specfact/error.hpp"
#include "specfact/lpoly.hpp"
#include "specfact/poly.hpp"
#include "specfact/ratfun.hpp"

namespace specfact {

/// Dense row-major matrix over an exact ring. T() must be the ring's zero and
/// T(Rat(1)) its one.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw Error(ErrorCode::InvalidArgument, "matrix data size mismatch");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(Rat(1));
    return m;
  }
  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<T>& data() const { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Rows [r0, r0 + nr) and columns [c0, c0 + nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorCode::InvalidArgument, "block out of range");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!specfact::is_zero(x)) return false;
    return true;
  }
  bool is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (i != j && !specfact::is_zero((*this)(i, j))) return false;
    return true;
  }
  bool column_is_zero(std::size_t j) const {
    for (std::size_t i = 0; i < rows_; ++i)
      if (!specfact::is_zero((*this)(i, j))) return false;
    return true;
  }
  bool row_is_zero(std::size_t i) const {
    for (std::size_t j = 0; j < cols_; ++j)
      if (!specfact::is_zero((*this)(i, j))) return false;
    return true;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += f * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const T& f) {
    if (specfact::is_zero(f)) return;
    for (std::size_t j = 0; j < cols_; ++j)
      if (!specfact::is_zero((*this)(src, j))) (*this)(dst, j) += f * (*this)(src, j);
  }
  /// col[dst] += col[src] * f
  void add_col_multiple(std::size_t dst, std::size_t src, const T& f) {
    if (specfact::is_zero(f)) return;
    for (std::size_t i = 0; i < rows_; ++i)
      if (!specfact::is_zero((*this)(i, src))) (*this)(i, dst) += (*this)(i, src) * f;
  }
  void scale_row(std::size_t i, const T& f) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = (*this)(i, j) * f;
  }
  void scale_col(std::size_t j, const T& f) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = (*this)(i, j) * f;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = f((*this)(i, j));
    return m;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix product dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (specfact::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!specfact::is_zero(b(k, j))) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& x : a.data_) x = s * x;
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::InvalidArgument, "matrix dimension mismatch");
  }
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rat>;
using PolyMatrix = Matrix<Poly>;
using LPolyMatrix = Matrix<LPoly>;
using RFMatrix = Matrix<RatFun>;

inline Rat exact_quotient(const Rat& a, const Rat& b) { return a / b; }
inline Poly exact_quotient(const Poly& a, const Poly& b) { return exact_div(a, b); }
inline LPoly exact_quotient(const LPoly& a, const LPoly& b) { return exact_div(a, b); }
inline RatFun exact_quotient(const RatFun& a, const RatFun& b) { return a / b; }

/// Fraction-free (Bareiss) determinant; every intermediate division is exact.
template <class T>
T det(Matrix<T> m) {
  if (!m.is_square()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(Rat(1));
  bool negate = false;
  T prev(Rat(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t s = k + 1;
      while (s < n && is_zero(m(s, k))) ++s;
      if (s == n) return T();
      m.swap_rows(k, s);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = exact_quotient(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
    prev = m(k, k);
  }
  T d = m(n - 1, n - 1);
  if (negate) d = -d;
  return d;
}

PolyMatrix to_poly_matrix(const RatMatrix& m);
RFMatrix to_rf(const RatMatrix& m);
RFMatrix to_rf(const PolyMatrix& m);
RFMatrix to_rf(const LPolyMatrix& m);
LPolyMatrix to_lpoly(const PolyMatrix& m);
/// Throws Error(DivisionNotExact) when an entry is not a Laurent polynomial.
LPolyMatrix to_lpoly(const RFMatrix& m);
/// Throws Error(InvalidArgument) when an entry is not polynomial.
PolyMatrix to_poly(const RFMatrix& m);
/// Throws Error(InvalidArgument) when an entry is not constant.
RatMatrix to_constant(const RFMatrix& m);
RatMatrix to_constant(const LPolyMatrix& m);

std::string to_string(const RatMatrix& m);
std::string to_string(const PolyMatrix& m);
std::string to_string(const LPolyMatrix& m);
std::string to_string(const RFMatrix& m);

// Dense linear algebra over Q.

struct RowEchelon {
  RatMatrix rref;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> free_cols;
};
RowEchelon row_echelon(const RatMatrix& m);
/// Basis of the right kernel, one vector per free column in increasing
/// column order.
std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);
/// Throws Error(InvalidArgument) when m is singular.
RatMatrix inverse(const RatMatrix& m);

}  // namespace specfact

#endif  // SPECFACT_MATRIX_HPP
