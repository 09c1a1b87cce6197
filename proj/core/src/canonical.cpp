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
#include "specfact/canonical.hpp"

#include <optional>

#include "specfact/error.hpp"

namespace specfact {

namespace {

struct SmithState {
  PolyMatrix A, U, Uinv, V, Vinv;

  // row i += f * row t
  void row_add(std::size_t i, std::size_t t, const Poly& f) {
    A.add_row_multiple(i, t, f);
    U.add_row_multiple(i, t, f);
    Uinv.add_col_multiple(t, i, -f);
  }
  // col j += col t * f
  void col_add(std::size_t j, std::size_t t, const Poly& f) {
    A.add_col_multiple(j, t, f);
    V.add_col_multiple(j, t, f);
    Vinv.add_row_multiple(t, j, -f);
  }
  void row_swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    A.swap_rows(a, b);
    U.swap_rows(a, b);
    Uinv.swap_cols(a, b);
  }
  void col_swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    A.swap_cols(a, b);
    V.swap_cols(a, b);
    Vinv.swap_rows(a, b);
  }
  void row_scale(std::size_t t, const Rat& c) {
    A.scale_row(t, Poly(c));
    U.scale_row(t, Poly(c));
    Uinv.scale_col(t, Poly(Rat(1 / c)));
  }
};

// Minimal-degree nonzero entry in rows [r0, r1) x cols [c0, c1), ties broken
// by lowest row then column.
std::optional<std::pair<std::size_t, std::size_t>> min_degree_entry(const PolyMatrix& a, std::size_t r0,
                                                                    std::size_t r1, std::size_t c0,
                                                                    std::size_t c1) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  int best_deg = 0;
  for (std::size_t i = r0; i < r1; ++i)
    for (std::size_t j = c0; j < c1; ++j) {
      const Poly& e = a(i, j);
      if (e.is_zero()) continue;
      if (!best || e.degree() < best_deg) {
        best = {i, j};
        best_deg = e.degree();
      }
    }
  return best;
}

}  // namespace

std::vector<Poly> SmithForm::invariant_factors() const {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(S(i, i));
  return out;
}

SmithForm smith_form(const PolyMatrix& g) {
  const std::size_t m = g.rows(), n = g.cols();
  SmithState st{g, PolyMatrix::identity(m), PolyMatrix::identity(m), PolyMatrix::identity(n),
                PolyMatrix::identity(n)};
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    auto piv = min_degree_entry(st.A, t, m, t, n);
    if (!piv) break;
    st.row_swap(t, piv->first);
    st.col_swap(t, piv->second);
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (st.A(i, t).is_zero()) continue;
        auto [qt, r] = divmod(st.A(i, t), st.A(t, t));
        st.row_add(i, t, -qt);
        if (!r.is_zero()) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (st.A(t, j).is_zero()) continue;
        auto [qt, r] = divmod(st.A(t, j), st.A(t, t));
        st.col_add(j, t, -qt);
        if (!r.is_zero()) dirty = true;
      }
      if (dirty) {
        // A remainder of lower degree than the pivot survived in row or
        // column t; move the smallest one into the pivot position.
        std::optional<std::pair<std::size_t, std::size_t>> best;
        int best_deg = st.A(t, t).degree();
        for (std::size_t i = t + 1; i < m; ++i)
          if (!st.A(i, t).is_zero() && st.A(i, t).degree() < best_deg) {
            best = {i, t};
            best_deg = st.A(i, t).degree();
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (!st.A(t, j).is_zero() && st.A(t, j).degree() < best_deg) {
            best = {t, j};
            best_deg = st.A(t, j).degree();
          }
        if (!best) throw Error(ErrorCode::InvariantViolation, "Smith reduction made no progress");
        st.row_swap(t, best->first);
        st.col_swap(t, best->second);
        continue;
      }
      // Row and column t are clear; enforce divisibility of the remainder.
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < m && !bad_row; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!st.A(i, j).is_zero() && !divides(st.A(t, t), st.A(i, j))) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      st.row_add(t, *bad_row, Poly(Rat(1)));
    }
    st.row_scale(t, Rat(1 / st.A(t, t).lead()));
  }
  SmithForm out;
  out.rank = t;
  out.S = std::move(st.A);
  out.U = std::move(st.U);
  out.Uinv = std::move(st.Uinv);
  out.V = std::move(st.V);
  out.Vinv = std::move(st.Vinv);
  return out;
}

RFMatrix SmithMcMillan::reassemble() const { return to_rf(C) * D * to_rf(F); }

SmithMcMillan smith_mcmillan(const RFMatrix& g) {
  Poly d(Rat(1));
  for (const auto& e : g.data()) d = lcm(d, e.den());
  PolyMatrix numer = g.map([&](const RatFun& e) { return e.num() * exact_div(d, e.den()); });
  SmithForm sf = smith_form(numer);
  SmithMcMillan out;
  out.rank = sf.rank;
  const std::size_t r = sf.rank;
  out.C = sf.Uinv.block(0, 0, g.rows(), r);
  out.F = sf.Vinv.block(0, 0, r, g.cols());
  out.F_right_inverse = sf.V.block(0, 0, g.cols(), r);
  out.C_left_inverse = sf.U.block(0, 0, r, g.rows());
  out.D = RFMatrix(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    RatFun di(sf.S(i, i), d);
    out.eps.push_back(di.num());
    out.psi.push_back(di.den());
    out.D(i, i) = std::move(di);
  }
  return out;
}

RFMatrix substitute_reciprocal(const RFMatrix& g) {
  return g.map([](const RatFun& f) { return star(f); });
}

StructuralIndices structural_indices(const SmithMcMillan& smm, const RootPoint& pt) {
  if (pt.is_infinity())
    throw Error(ErrorCode::InvalidArgument, "indices at infinity need the original matrix");
  StructuralIndices out{pt, {}};
  for (std::size_t i = 0; i < smm.rank; ++i) out.indices.push_back(*valuation(smm.D(i, i), pt));
  return out;
}

StructuralIndices structural_indices(const RFMatrix& g, const RootPoint& pt) {
  if (!pt.is_infinity()) return structural_indices(smith_mcmillan(g), pt);
  SmithMcMillan at_inf = smith_mcmillan(substitute_reciprocal(g));
  StructuralIndices out = structural_indices(at_inf, RootPoint::at(Rat(0)));
  out.point = pt;
  return out;
}

int pole_degree_at_infinity(const RFMatrix& g) {
  int deg = 0;
  for (int v : structural_indices(g, RootPoint::infinity()).indices)
    if (v < 0) deg -= v;
  return deg;
}

int mcmillan_degree(const SmithMcMillan& smm, const RFMatrix& g) {
  int deg = 0;
  for (const auto& p : smm.psi) deg += p.degree();
  return deg + pole_degree_at_infinity(g);
}

int mcmillan_degree(const RFMatrix& g) {
  if (g.is_zero()) return 0;
  return mcmillan_degree(smith_mcmillan(g), g);
}

PolyMatrix unimodular_right_inverse(const PolyMatrix& f) {
  SmithForm sf = smith_form(f);
  const std::size_t r = f.rows();
  if (sf.rank != r) throw Error(ErrorCode::NotUnimodular, "matrix does not have full row rank");
  for (std::size_t i = 0; i < r; ++i)
    if (sf.S(i, i).degree() != 0)
      throw Error(ErrorCode::NotUnimodular, "nonconstant invariant factor " + to_string(sf.S(i, i)));
  return sf.V.block(0, 0, f.cols(), r) * sf.U;
}

PolyMatrix unimodular_left_inverse(const PolyMatrix& c) {
  SmithForm sf = smith_form(c);
  const std::size_t r = c.cols();
  if (sf.rank != r) throw Error(ErrorCode::NotUnimodular, "matrix does not have full column rank");
  for (std::size_t i = 0; i < r; ++i)
    if (sf.S(i, i).degree() != 0)
      throw Error(ErrorCode::NotUnimodular, "nonconstant invariant factor " + to_string(sf.S(i, i)));
  return sf.V * sf.U.block(0, 0, r, c.rows());
}

}  // namespace specfact
