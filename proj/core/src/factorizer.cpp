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
#include "specfact/factorizer.hpp"

#include <algorithm>
#include <cmath>
#include <Eigen/QR>
#include <numbers>

#include "specfact/error.hpp"
#include "specfact/polymatrix.hpp"

namespace specfact {

namespace {

RFMatrix scaled_diagonal(const std::vector<Rat>& s) {
  std::vector<RatFun> d;
  for (const auto& x : s) d.emplace_back(x);
  return RFMatrix::diagonal(d);
}

Poly product(const std::vector<Poly>& ps) {
  Poly out{Rat(1)};
  for (const auto& p : ps) out = out * p;
  return out;
}

bool has_circle_roots(const Poly& p, double tol) {
  return classify_roots(RegionSpec::outside(), p.monic(), tol).on_circle.degree() > 0;
}

// max |Phi - W^H W| over grid points of the circle where both are defined,
// relative to max(1, max |Phi|).
double sampled_residual(const RFMatrix& phi, const RowScaled<RatFun>& w, std::size_t grid) {
  std::vector<double> root_scales;
  for (const auto& s : w.scales) root_scales.push_back(std::sqrt(s.get_d()));
  double worst = 0.0, size = 1.0;
  for (std::size_t k = 0; k < grid; ++k) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(grid);
    const std::complex<double> x = std::polar(1.0, t);
    auto p = evaluate(phi, x);
    auto b = evaluate(w.base, x);
    if (!p || !b) continue;
    for (Eigen::Index i = 0; i < b->rows(); ++i) b->row(i) *= root_scales[static_cast<std::size_t>(i)];
    ComplexMatrix diff = *p - b->adjoint() * *b;
    worst = std::max(worst, diff.cwiseAbs().maxCoeff());
    size = std::max(size, p->cwiseAbs().maxCoeff());
  }
  return worst / size;
}

}  // namespace

RFMatrix gram(const RowScaled<RatFun>& w) { return star(w.base) * scaled_diagonal(w.scales) * w.base; }

RFMatrix Certificate::reassemble() const {
  RFMatrix qb = to_rf(Q) * B;
  return star(qb) * scaled_diagonal(Dc) * qb;
}

PoleZeroSummary pole_zero_summary(const RFMatrix& g) {
  PoleZeroSummary out;
  SmithMcMillan smm = smith_mcmillan(g);
  out.poles = product(smm.psi);
  out.zeros = product(smm.eps);
  for (int k : structural_indices(g, RootPoint::infinity()).indices) {
    if (k < 0) out.pole_order_at_infinity -= k;
    if (k > 0) out.zero_order_at_infinity += k;
  }
  return out;
}

bool avoids_region(const RegionSpec& a, const Poly& finite, bool at_infinity, double tol) {
  if (at_infinity && a.contains_infinity()) return false;
  if (finite.degree() < 1) return true;
  RootClassification c = classify_roots(a, finite.monic(), tol);
  if (c.in_region.degree() > 0) return false;
  return !(a.closed_circle && c.on_circle.degree() > 0);
}

SpectralFactorization factorize(const RFMatrix& phi, const RegionPair& regions, const FactorizeOptions& opts) {
  regions.validate();
  if (!phi.is_square()) throw Error(ErrorCode::NotASpectrum, "Phi is not square");
  if (!is_para_hermitian(phi)) throw Error(ErrorCode::NotASpectrum, "Phi is not para-Hermitian");
  SpectrumReport rep = spectrum_report(phi, opts.grid, opts.tol);
  if (!rep.ok())
    throw Error(ErrorCode::NotASpectrum,
                "Phi is not positive semidefinite on the unit circle (min eigenvalue " + std::to_string(rep.min_eigenvalue) + ")");

  SpectralFactorization out;
  out.regions = regions;
  out.smm = smith_mcmillan(phi);
  if (out.smm.rank == 0) throw Error(ErrorCode::RankZero, "Phi has normal rank zero");
  out.diagnostics.mcmillan_phi = mcmillan_degree(out.smm, phi);
  if (out.diagnostics.mcmillan_phi % 2 != 0)
    throw Error(ErrorCode::NotASpectrum, "McMillan degree " + std::to_string(out.diagnostics.mcmillan_phi) + " is odd");

  out.split = split_diagonal(out.smm.eps, out.smm.psi, regions, opts.tol);
  LPolyMatrix psi1 = build_psi(out.smm, out.split, opts.tol);
  ReductionOptions ro = opts.reduction;
  if (out.split.approximate && !ro.numeric_tol) ro.numeric_tol = opts.tol;
  out.trace = reduce(psi1, ro);

  out.P = assemble_P(out.trace);
  out.Dplus = out.split.Dplus();
  const RFMatrix F = to_rf(out.smm.F);
  out.W = RowScaled<RatFun>{out.P.scales, to_rf(out.P.base) * out.Dplus * F};
  out.certificate = Certificate{assemble_Q(out.trace), out.trace.ldl.Dc, out.Dplus * F};

  FactorDiagnostics& d = out.diagnostics;
  d.exact_path = !out.split.approximate;
  d.c_exact = out.trace.C.exact();
  d.iterations = out.trace.steps.size();
  if (d.exact_path) {
    d.exact_identity = gram(out.W) == phi && out.certificate.reassemble() == phi;
    if (!d.exact_identity) throw Error(ErrorCode::InvariantViolation, "Phi != W* W");
    d.w = pole_zero_summary(out.W.base);
    d.mcmillan_w = mcmillan_degree(out.W.base);
    d.poles_ok = avoids_region(regions.poles, d.w.poles, d.w.pole_order_at_infinity > 0, opts.tol);
    d.zeros_ok = avoids_region(regions.zeros, d.w.zeros, d.w.zero_order_at_infinity > 0, opts.tol);
    if (!d.poles_ok || !d.zeros_ok) throw Error(ErrorCode::InvariantViolation, "W violates the region constraints");
    if (2 * d.mcmillan_w != d.mcmillan_phi)
      throw Error(ErrorCode::InvariantViolation, "W is not stochastically minimal");
  } else {
    d.sampled_residual = sampled_residual(phi, out.W, opts.grid);
    if (*d.sampled_residual > opts.tol)
      throw Error(ErrorCode::NumericFallbackExceededTolerance,
                  "sampled residual " + std::to_string(*d.sampled_residual) + " exceeds tolerance");
    // Poles and zeros of W are those of D+ up to the polynomial factors.
    Poly poles{Rat(1)}, zeros{Rat(1)};
    for (std::size_t i = 0; i < out.Dplus.rows(); ++i) {
      zeros = zeros * out.Dplus(i, i).num().monic();
      poles = poles * out.Dplus(i, i).den();
    }
    d.w.poles = poles;
    d.w.zeros = zeros;
    d.poles_ok = avoids_region(regions.poles, poles, false, opts.tol);
    d.zeros_ok = avoids_region(regions.zeros, zeros, false, opts.tol);
    d.mcmillan_w = d.mcmillan_phi / 2;
  }
  return out;
}

RegionPair youla_regions(const RFMatrix& phi, double tol) {
  RegionPair r{RegionSpec::outside(), RegionSpec::outside()};
  SmithMcMillan smm = smith_mcmillan(phi);
  if (!has_circle_roots(product(smm.psi), tol)) {
    r.poles.closed_circle = true;
    if (!has_circle_roots(product(smm.eps), tol)) r.zeros.closed_circle = true;
  }
  return r;
}

SpectralFactorization factorize_youla(const RFMatrix& phi, const FactorizeOptions& opts) {
  if (!phi.is_square()) throw Error(ErrorCode::NotASpectrum, "Phi is not square");
  return factorize(phi, youla_regions(phi, opts.tol), opts);
}

VerificationReport verify(const RFMatrix& phi, const RowScaled<RatFun>& w, const RegionPair& regions, double tol,
                          std::size_t grid) {
  VerificationReport rep;
  if (!phi.is_square() || w.base.cols() != phi.cols() || w.scales.size() != w.base.rows()) {
    rep.failures.push_back("dimension mismatch");
    return rep;
  }
  rep.exact_residual_zero = gram(w) == phi;
  rep.sampled_residual = sampled_residual(phi, w, grid);
  rep.residual_ok = rep.exact_residual_zero || rep.sampled_residual <= tol;
  if (!rep.residual_ok) rep.failures.push_back("residual: Phi - W* W is " + std::to_string(rep.sampled_residual));

  rep.w = pole_zero_summary(w.base);
  rep.poles_ok = avoids_region(regions.poles, rep.w.poles, rep.w.pole_order_at_infinity > 0, tol);
  rep.zeros_ok = avoids_region(regions.zeros, rep.w.zeros, rep.w.zero_order_at_infinity > 0, tol);
  if (!rep.poles_ok) rep.failures.push_back("poles: W has a pole in the pole region");
  if (!rep.zeros_ok) rep.failures.push_back("zeros: W has a zero in the zero region");

  rep.mcmillan_phi = mcmillan_degree(phi);
  rep.mcmillan_w = mcmillan_degree(w.base);
  rep.minimal = 2 * rep.mcmillan_w == rep.mcmillan_phi;
  if (!rep.minimal)
    rep.failures.push_back("minimality: 2 * " + std::to_string(rep.mcmillan_w) + " != " + std::to_string(rep.mcmillan_phi));
  return rep;
}

VerificationReport verify(const RFMatrix& phi, const RFMatrix& w, const RegionPair& regions, double tol,
                          std::size_t grid) {
  return verify(phi, RowScaled<RatFun>{std::vector<Rat>(w.rows(), Rat(1)), w}, regions, tol, grid);
}

std::optional<RatMatrix> OrthogonalRelation::exact() const {
  for (const auto& s : left)
    if (s != 1) return std::nullopt;
  for (const auto& s : right)
    if (s != 1) return std::nullopt;
  return M;
}

Eigen::MatrixXd OrthogonalRelation::numeric() const {
  Eigen::MatrixXd t(static_cast<Eigen::Index>(M.rows()), static_cast<Eigen::Index>(M.cols()));
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j)
      t(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          std::sqrt(left[i].get_d() / right[j].get_d()) * M(i, j).get_d();
  return t;
}

std::optional<OrthogonalRelation> orthogonal_relator(const RowScaled<RatFun>& w1, const RowScaled<RatFun>& w2) {
  if (w1.base.rows() != w2.base.rows() || w1.base.cols() != w2.base.cols()) return std::nullopt;
  const std::size_t r = w2.base.rows();
  SmithMcMillan smm = smith_mcmillan(w2.base);
  if (smm.rank != r) return std::nullopt;
  std::vector<RatFun> dinv;
  for (std::size_t i = 0; i < r; ++i) dinv.push_back(RatFun(Rat(1)) / smm.D(i, i));
  RFMatrix right_inv = to_rf(smm.F_right_inverse) * RFMatrix::diagonal(dinv) * to_rf(smm.C_left_inverse);
  RFMatrix m = w1.base * right_inv;
  for (const auto& e : m.data())
    if (!e.is_constant()) return std::nullopt;
  RatMatrix M = to_constant(m);
  if (!(to_rf(M) * w2.base == w1.base)) return std::nullopt;
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t k = 0; k < r; ++k) {
      Rat s = 0;
      for (std::size_t i = 0; i < r; ++i) s += w1.scales[i] * M(i, j) * M(i, k);
      if (s != (j == k ? w2.scales[j] : Rat(0))) return std::nullopt;
    }
  return OrthogonalRelation{M, w1.scales, w2.scales};
}

std::optional<OrthogonalRelation> orthogonal_relator(const RFMatrix& w1, const RFMatrix& w2) {
  return orthogonal_relator(RowScaled<RatFun>{std::vector<Rat>(w1.rows(), Rat(1)), w1},
                            RowScaled<RatFun>{std::vector<Rat>(w2.rows(), Rat(1)), w2});
}

namespace {

std::optional<ComplexMatrix> sample(const RowScaled<RatFun>& w, std::complex<double> z) {
  auto v = evaluate(w.base, z);
  if (!v) return std::nullopt;
  for (std::size_t i = 0; i < w.scales.size(); ++i) v->row(static_cast<Eigen::Index>(i)) *= std::sqrt(w.scales[i].get_d());
  return v;
}

}  // namespace

std::optional<Eigen::MatrixXd> numeric_relator(const RowScaled<RatFun>& w1, const RowScaled<RatFun>& w2, double tol,
                                               std::size_t grid) {
  if (w1.base.rows() != w2.base.rows() || w1.base.cols() != w2.base.cols()) return std::nullopt;
  const auto r = static_cast<Eigen::Index>(w1.base.rows());
  std::optional<ComplexMatrix> t0;
  for (std::size_t k = 0; k < grid; ++k) {
    const double omega = 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.37) / static_cast<double>(grid);
    auto a = sample(w1, std::polar(1.0, omega)), b = sample(w2, std::polar(1.0, omega));
    if (!a || !b) continue;
    ComplexMatrix t = *a * b->completeOrthogonalDecomposition().pseudoInverse();
    if (!t0) t0 = t;
    else if ((t - *t0).cwiseAbs().maxCoeff() > tol) return std::nullopt;
  }
  if (!t0 || t0->imag().cwiseAbs().maxCoeff() > tol) return std::nullopt;
  Eigen::MatrixXd t = t0->real();
  if ((t.transpose() * t - Eigen::MatrixXd::Identity(r, r)).cwiseAbs().maxCoeff() > tol) return std::nullopt;
  return t;
}

RFMatrix compose_parametrization(const RFMatrix& w, const RFMatrix& v) {
  if (!v.is_square() || v.rows() < w.rows()) throw Error(ErrorCode::InvalidArgument, "V must be m x m with m >= r");
  if (!is_para_unitary(v)) throw Error(ErrorCode::NotParaUnitary, "V is not para-unitary");
  return v.block(0, 0, v.rows(), w.rows()) * w;
}

DualFactorization dual_factorize(const RFMatrix& phi, const RegionPair& regions, const FactorizeOptions& opts) {
  DualFactorization out;
  out.of_transpose = factorize(phi.transpose(), regions, opts);
  out.base = out.of_transpose.W.base.transpose();
  out.col_scales = out.of_transpose.W.scales;
  return out;
}

bool lpoly_specialization_check(const LPolyMatrix& phi, const SpectralFactorization& result) {
  if (result.diagnostics.exact_path && !(gram(result.W) == to_rf(phi))) return false;
  const RegionSpec& a = result.regions.poles;
  for (const auto& e : result.W.base.data()) {
    if (e.num().is_zero()) continue;
    if (a.contains_zero() && e.den().degree() > 0) return false;
    if (a.contains_infinity()) {
      const int k = e.den().degree();
      if (!(e.den() == Poly::monomial(Rat(1), static_cast<std::size_t>(k))) || e.num().degree() > k) return false;
    }
  }
  return true;
}

}  // namespace specfact
