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
#include "specfact/matrix.hpp"

#include <sstream>

namespace specfact {

namespace {

template <class T>
std::string render(const Matrix<T>& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "") << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << to_string(m(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace

PolyMatrix to_poly_matrix(const RatMatrix& m) {
  return m.map([](const Rat& x) { return Poly(x); });
}
RFMatrix to_rf(const RatMatrix& m) {
  return m.map([](const Rat& x) { return RatFun(x); });
}
RFMatrix to_rf(const PolyMatrix& m) {
  return m.map([](const Poly& x) { return RatFun(x); });
}
RFMatrix to_rf(const LPolyMatrix& m) {
  return m.map([](const LPoly& x) { return RatFun(x); });
}
LPolyMatrix to_lpoly(const PolyMatrix& m) {
  return m.map([](const Poly& x) { return LPoly(x); });
}
LPolyMatrix to_lpoly(const RFMatrix& m) {
  return m.map([](const RatFun& x) { return x.to_lpoly(); });
}
PolyMatrix to_poly(const RFMatrix& m) {
  return m.map([](const RatFun& x) {
    if (!x.is_polynomial()) throw Error(ErrorCode::InvalidArgument, "entry is not polynomial: " + to_string(x));
    return x.num();
  });
}
RatMatrix to_constant(const RFMatrix& m) {
  return m.map([](const RatFun& x) { return x.constant(); });
}
RatMatrix to_constant(const LPolyMatrix& m) {
  return m.map([](const LPoly& x) {
    if (!x.is_constant()) throw Error(ErrorCode::InvalidArgument, "entry is not constant: " + to_string(x));
    return x.coeff_at(0);
  });
}

std::string to_string(const RatMatrix& m) { return render(m); }
std::string to_string(const PolyMatrix& m) { return render(m); }
std::string to_string(const LPolyMatrix& m) { return render(m); }
std::string to_string(const RFMatrix& m) { return render(m); }

RowEchelon row_echelon(const RatMatrix& m) {
  RowEchelon out{m, {}, {}};
  RatMatrix& a = out.rref;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && is_zero(a(piv, col))) ++piv;
    if (piv == a.rows()) {
      out.free_cols.push_back(col);
      continue;
    }
    a.swap_rows(row, piv);
    Rat inv = 1 / a(row, col);
    a.scale_row(row, inv);
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (i != row && !is_zero(a(i, col))) a.add_row_multiple(i, row, -a(i, col));
    out.pivot_cols.push_back(col);
    ++row;
  }
  return out;
}

std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m) {
  RowEchelon e = row_echelon(m);
  std::vector<std::vector<Rat>> basis;
  for (std::size_t f : e.free_cols) {
    std::vector<Rat> v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.rref(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const RatMatrix& m) { return row_echelon(m).pivot_cols.size(); }

RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::InvalidArgument, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RowEchelon e = row_echelon(aug);
  if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1)
    throw Error(ErrorCode::InvalidArgument, "matrix is singular");
  return e.rref.block(0, n, n, n);
}

}  // namespace specfact
