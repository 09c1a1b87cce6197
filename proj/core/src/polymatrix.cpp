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
#include "specfact/polymatrix.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

namespace specfact {

RFMatrix star(const RFMatrix& g) {
  return g.transpose().map([](const RatFun& f) { return star(f); });
}

LPolyMatrix star(const LPolyMatrix& g) {
  return g.transpose().map([](const LPoly& f) { return star(f); });
}

LPolyMatrix star(const PolyMatrix& g) { return star(to_lpoly(g)); }

DegreeProfile degree_profile(const LPolyMatrix& g) {
  DegreeProfile d;
  d.column_max.resize(g.cols());
  d.column_min.resize(g.cols());
  d.row_max.resize(g.rows());
  d.row_min.resize(g.rows());
  auto upd_max = [](std::optional<int>& slot, int v) {
    if (!slot || v > *slot) slot = v;
  };
  auto upd_min = [](std::optional<int>& slot, int v) {
    if (!slot || v < *slot) slot = v;
  };
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      const LPoly& e = g(i, j);
      if (e.is_zero()) continue;
      upd_max(d.column_max[j], e.max_degree());
      upd_min(d.column_min[j], e.min_degree());
      upd_max(d.row_max[i], e.max_degree());
      upd_min(d.row_min[i], e.min_degree());
    }
  return d;
}

namespace {

enum class Side { HighCol, LowCol, HighRow, LowRow };

RatMatrix coefficient_matrix(const LPolyMatrix& g, Side side) {
  DegreeProfile d = degree_profile(g);
  RatMatrix out(g.rows(), g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      std::optional<int> deg;
      switch (side) {
        case Side::HighCol: deg = d.column_max[j]; break;
        case Side::LowCol: deg = d.column_min[j]; break;
        case Side::HighRow: deg = d.row_max[i]; break;
        case Side::LowRow: deg = d.row_min[i]; break;
      }
      if (!deg) {
        const bool col = side == Side::HighCol || side == Side::LowCol;
        throw Error(ErrorCode::ZeroColumn,
                    std::string(col ? "column " : "row ") + std::to_string(col ? j : i) + " is identically zero");
      }
      out(i, j) = g(i, j).coeff_at(*deg);
    }
  return out;
}

bool is_monomial_nonzero(const LPoly& p) { return p.is_monomial(); }

}  // namespace

RatMatrix hc_matrix(const LPolyMatrix& g) { return coefficient_matrix(g, Side::HighCol); }
RatMatrix lc_matrix(const LPolyMatrix& g) { return coefficient_matrix(g, Side::LowCol); }
RatMatrix hr_matrix(const LPolyMatrix& g) { return coefficient_matrix(g, Side::HighRow); }
RatMatrix lr_matrix(const LPolyMatrix& g) { return coefficient_matrix(g, Side::LowRow); }

bool is_para_hermitian(const RFMatrix& g) { return g.is_square() && star(g) == g; }
bool is_para_hermitian(const LPolyMatrix& g) { return g.is_square() && star(g) == g; }

bool is_para_unitary(const RFMatrix& g) {
  if (!g.is_square()) return false;
  const RFMatrix id = RFMatrix::identity(g.rows());
  const RFMatrix gs = star(g);
  return gs * g == id && g * gs == id;
}

bool is_L_unimodular(const LPolyMatrix& g) {
  if (!g.is_square()) return false;
  return is_monomial_nonzero(det(g));
}

bool is_unimodular(const PolyMatrix& g) {
  if (!g.is_square()) return false;
  Poly d = det(g);
  return d.degree() == 0;
}

std::optional<ComplexMatrix> evaluate(const RFMatrix& g, std::complex<double> x) {
  ComplexMatrix out(static_cast<Eigen::Index>(g.rows()), static_cast<Eigen::Index>(g.cols()));
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      const RatFun& f = g(i, j);
      std::complex<double> d = f.den().eval(x);
      double scale = 0.0;
      for (const auto& c : f.den().coeffs()) scale += std::abs(c.get_d());
      if (std::abs(d) <= 1e-12 * scale) return std::nullopt;
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = f.num().eval(x) / d;
    }
  return out;
}

ComplexMatrix evaluate(const LPolyMatrix& g, std::complex<double> x) {
  ComplexMatrix out(static_cast<Eigen::Index>(g.rows()), static_cast<Eigen::Index>(g.cols()));
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = g(i, j).eval(x);
  return out;
}

SpectrumReport spectrum_report(const RFMatrix& phi, std::size_t grid, double tol) {
  SpectrumReport rep;
  rep.square = phi.is_square();
  if (!rep.square) return rep;
  rep.para_hermitian = is_para_hermitian(phi);
  if (!rep.para_hermitian) return rep;
  rep.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < grid; ++k) {
    const double omega = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(grid);
    auto value = evaluate(phi, std::polar(1.0, omega));
    if (!value) {
      ++rep.undefined_samples;
      continue;
    }
    ComplexMatrix h = 0.5 * (*value + value->adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues().minCoeff();
    rep.min_eigenvalue = std::min(rep.min_eigenvalue, lo);
    const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    if (lo < -tol * scale) rep.failures.push_back({omega, lo});
  }
  return rep;
}

}  // namespace specfact
