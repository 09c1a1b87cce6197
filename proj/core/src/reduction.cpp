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
#include "specfact/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "specfact/error.hpp"
#include "specfact/polymatrix.hpp"
#include "specfact/precise.hpp"

namespace specfact {

namespace {

std::vector<int> column_degrees(const LPolyMatrix& psi) {
  DegreeProfile d = degree_profile(psi);
  std::vector<int> K;
  for (std::size_t j = 0; j < psi.cols(); ++j) {
    if (!d.column_max[j]) throw Error(ErrorCode::ZeroColumn, "column " + std::to_string(j) + " of Psi is zero");
    K.push_back(*d.column_max[j]);
  }
  return K;
}

double max_coeff(const LPolyMatrix& m) {
  double best = 0.0;
  for (const auto& e : m.data())
    for (const auto& c : e.coeffs()) best = std::max(best, std::abs(c.get_d()));
  return best;
}

// Rounds to the fallback precision, drops terms below drop * (largest
// coefficient) and symmetrizes.
LPolyMatrix clean(const LPolyMatrix& m, double drop = kPreciseDrop) {
  const double cut = drop * max_coeff(m);
  LPolyMatrix r = m.map([&](const LPoly& e) {
    if (e.is_zero()) return e;
    std::vector<Rat> c;
    for (const auto& x : e.coeffs()) c.push_back(std::abs(x.get_d()) <= cut ? Rat(0) : round_precise(x));
    return LPoly(e.minpow(), std::move(c));
  });
  LPolyMatrix s = star(r);
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) = round_precise((r(i, j) + s(i, j)) * Rat(1, 2), 0.0);
  return r;
}

}  // namespace

std::vector<Rat> primitive_integer_vector(const std::vector<Rat>& v) {
  Int l = 1, g = 0;
  for (const auto& x : v) l = lcm(l, Int(x.get_den()));
  std::vector<Rat> out;
  for (const auto& x : v) {
    Rat y = x * Rat(l);
    g = gcd(g, Int(y.get_num()));
    out.push_back(y);
  }
  if (g == 0) return out;
  int sign = 0;
  for (const auto& x : out)
    if (sgn(x) != 0) {
      sign = sgn(x);
      break;
    }
  for (auto& x : out) {
    x /= Rat(g);
    if (sign < 0) x = -x;
  }
  return out;
}

LPolyMatrix build_psi(const SmithMcMillan& smm, const SplitDecomposition& split, double tol) {
  const std::size_t r = smm.rank;
  LPolyMatrix xi = star(smm.C) * to_lpoly(smm.F_right_inverse);
  RFMatrix dplus = split.Dplus();
  LPolyMatrix psi(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (xi(i, j).is_zero()) continue;
      RatFun e = RatFun(star(split.sigma[i])) * dplus(i, i) * RatFun(xi(i, j)) / dplus(j, j);
      if (split.approximate) {
        psi(i, j) = approx_lpoly(e, tol);
      } else {
        if (!e.is_lpoly())
          throw Error(ErrorCode::DivisionNotExact,
                      "Psi(" + std::to_string(i) + "," + std::to_string(j) + ") = " + to_string(e) + " is not a Laurent polynomial");
        psi(i, j) = e.to_lpoly();
      }
    }
  if (split.approximate) psi = clean(psi);
  if (!is_para_hermitian(psi)) throw Error(ErrorCode::InvariantViolation, "Psi is not para-Hermitian");
  SpectrumReport rep = spectrum_report(to_rf(psi), 128, tol);
  if (!rep.ok())
    throw Error(split.approximate ? ErrorCode::NumericFallbackExceededTolerance : ErrorCode::NotPDOnCircle, "Psi has eigenvalue " + std::to_string(rep.min_eigenvalue) + " on the unit circle");
  return psi;
}

StepResult reduce_step(const LPolyMatrix& psi, const ReductionOptions& opts) {
  const std::size_t r = psi.rows();
  std::vector<int> K = column_degrees(psi);
  RatMatrix hc = hc_matrix(psi);
  std::vector<Rat> v;
  if (opts.numeric_tol) {
    if (auto k = precise_kernel(hc, kPreciseDrop, opts.kernel == KernelChoice::LastFree)) v = std::move(*k);
  } else {
    auto basis = kernel_basis(hc);
    if (!basis.empty()) v = opts.kernel == KernelChoice::FirstFree ? basis.front() : basis.back();
  }
  if (v.empty()) {
    for (int k : K)
      if (k != 0)
        throw Error(ErrorCode::InvariantViolation, "nonsingular leading coefficients but Psi is not constant");
    return Constant{to_constant(psi)};
  }
  v = primitive_integer_vector(v);
  std::optional<std::size_t> p;
  for (std::size_t i = 0; i < r; ++i)
    if (sgn(v[i]) != 0 && (!p || K[i] > K[*p] || (K[i] == K[*p] && opts.pivot == PivotChoice::Largest))) p = i;
  ReductionStep step;
  step.v = v;
  step.pivot = *p;
  step.K_before = K;
  step.omega_inv = PolyMatrix::identity(r);
  step.omega = PolyMatrix::identity(r);
  for (std::size_t i = 0; i < r; ++i) {
    if (i == *p || sgn(v[i]) == 0) continue;
    if (K[i] > K[*p]) throw Error(ErrorCode::InvariantViolation, "active index above the pivot degree");
    Poly e = Poly::monomial(Rat(v[i] / v[*p]), static_cast<std::size_t>(K[*p] - K[i]));
    step.omega_inv(i, *p) = e;
    step.omega(i, *p) = -e;
  }
  LPolyMatrix oi = to_lpoly(step.omega_inv);
  LPolyMatrix next = star(oi) * psi * oi;
  if (opts.numeric_tol) next = clean(next);
  step.K_after = column_degrees(next);
  return std::make_pair(std::move(step), std::move(next));
}

LDL ldl(const RatMatrix& a) {
  if (!a.is_square() || !(a.transpose() == a)) throw Error(ErrorCode::NotPositiveDefinite, "matrix is not symmetric");
  const std::size_t n = a.rows();
  LDL f{RatMatrix::identity(n), std::vector<Rat>(n)};
  for (std::size_t j = 0; j < n; ++j) {
    Rat d = a(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= f.L(j, k) * f.L(j, k) * f.Dc[k];
    if (sgn(d) <= 0)
      throw Error(ErrorCode::NotPositiveDefinite, "leading principal minor " + std::to_string(j + 1) + " is not positive");
    f.Dc[j] = d;
    for (std::size_t i = j + 1; i < n; ++i) {
      Rat s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= f.L(i, k) * f.L(j, k) * f.Dc[k];
      f.L(i, j) = s / d;
    }
  }
  return f;
}

RowScaled<Rat> ldl_sqrt(const LDL& f) { return fold_squares(f.Dc, f.L.transpose()); }

ReductionTrace reduce(const LPolyMatrix& psi, const ReductionOptions& opts) {
  if (!psi.is_square()) throw Error(ErrorCode::InvalidArgument, "Psi must be square");
  if (!is_para_hermitian(psi)) throw Error(ErrorCode::InvariantViolation, "Psi is not para-Hermitian");
  const LPoly d0 = det(psi);
  if (!opts.numeric_tol && !d0.is_constant())
    throw Error(ErrorCode::InvariantViolation, "det Psi is not a nonzero constant: " + to_string(d0));
  if (d0.is_zero()) throw Error(ErrorCode::InvariantViolation, "Psi is singular");

  ReductionTrace trace;
  trace.approximate = opts.numeric_tol.has_value();
  trace.det_psi = d0.coeff_at(0);
  std::vector<int> K0 = column_degrees(psi);
  for (int k : K0) {
    if (k < 0) throw Error(ErrorCode::InvariantViolation, "negative column degree in Psi");
    trace.iteration_bound += k;
  }
  trace.psi_sequence.push_back(psi);
  for (;;) {
    StepResult res = reduce_step(trace.psi_sequence.back(), opts);
    if (auto* c = std::get_if<Constant>(&res)) {
      trace.psi_final = c->value;
      break;
    }
    auto& [step, next] = std::get<std::pair<ReductionStep, LPolyMatrix>>(res);
    const std::size_t p = step.pivot;
    if (step.K_after[p] >= step.K_before[p])
      throw Error(ErrorCode::DegreeNotReduced, "pivot column " + std::to_string(p) + " did not drop in degree");
    for (std::size_t i = 0; i < step.K_after.size(); ++i)
      if (step.K_after[i] > step.K_before[i])
        throw Error(ErrorCode::DegreeNotReduced, "column " + std::to_string(i) + " grew in degree");
    if (!opts.numeric_tol) {
      if (!is_para_hermitian(next)) throw Error(ErrorCode::InvariantViolation, "para-Hermitian symmetry lost");
      if (!(det(next) == d0)) throw Error(ErrorCode::InvariantViolation, "determinant changed during reduction");
    }
    trace.steps.push_back(std::move(step));
    trace.psi_sequence.push_back(std::move(next));
    if (static_cast<int>(trace.steps.size()) > trace.iteration_bound)
      throw Error(ErrorCode::InvariantViolation, "iteration bound exceeded");
  }
  trace.ldl = ldl(trace.psi_final);
  trace.C = ldl_sqrt(trace.ldl);
  return trace;
}

PolyMatrix assemble_Q(const ReductionTrace& trace) {
  PolyMatrix prod = PolyMatrix::identity(trace.psi_final.rows());
  for (const auto& s : trace.steps) prod = s.omega * prod;
  return to_poly_matrix(trace.ldl.L.transpose()) * prod;
}

RowScaled<Poly> assemble_P(const ReductionTrace& trace) { return fold_squares(trace.ldl.Dc, assemble_Q(trace)); }

double sqrt_residual(const ReductionTrace& trace) {
  const std::size_t r = trace.psi_final.rows();
  constexpr mp_bitcnt_t kBits = 256;
  std::vector<mpf_class> c(r * r, mpf_class(0, kBits));
  for (std::size_t i = 0; i < r; ++i) {
    mpf_class s(trace.C.scales[i], kBits);
    s = sqrt(s);
    for (std::size_t j = 0; j < r; ++j) c[i * r + j] = s * mpf_class(trace.C.base(i, j), kBits);
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      mpf_class acc(0, kBits);
      for (std::size_t k = 0; k < r; ++k) acc += c[k * r + i] * c[k * r + j];
      acc -= mpf_class(trace.psi_final(i, j), kBits);
      worst = std::max(worst, std::abs(acc.get_d()));
    }
  return worst;
}

}  // namespace specfact
