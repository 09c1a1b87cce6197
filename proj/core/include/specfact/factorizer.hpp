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
#ifndef SPECFACT_FACTORIZER_HPP
#define SPECFACT_FACTORIZER_HPP

#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

#include "specfact/canonical.hpp"
#include "specfact/reduction.hpp"
#include "specfact/regions.hpp"

namespace specfact {

struct FactorizeOptions {
  ReductionOptions reduction;
  double tol = 1e-9;
  std::size_t grid = 512;
};

/// Phi = (Q B)* diag(Dc) (Q B) with B = D+ F, all rational.
struct Certificate {
  PolyMatrix Q;
  std::vector<Rat> Dc;
  RFMatrix B;

  RFMatrix reassemble() const;
};

/// Poles and zeros of a rational matrix read off its Smith-McMillan form.
struct PoleZeroSummary {
  Poly poles{Rat(1)};
  Poly zeros{Rat(1)};
  int pole_order_at_infinity = 0;
  int zero_order_at_infinity = 0;
};
PoleZeroSummary pole_zero_summary(const RFMatrix& g);

/// True when no listed point lies in A (the circle counts when A is closed).
bool avoids_region(const RegionSpec& a, const Poly& finite, bool at_infinity, double tol = 1e-9);

struct FactorDiagnostics {
  int mcmillan_phi = 0;
  int mcmillan_w = 0;
  PoleZeroSummary w;
  bool poles_ok = false;
  bool zeros_ok = false;
  /// Phi == W* W checked exactly (through the certificate when C is inexact).
  bool exact_identity = false;
  /// Max |Phi - W* W| over the circle grid; set on the approximate path.
  std::optional<double> sampled_residual;
  /// All arithmetic stayed rational.
  bool exact_path = true;
  /// The constant factor C has rational entries.
  bool c_exact = true;
  std::size_t iterations = 0;
};

struct SpectralFactorization {
  /// W = diag(sqrt(scales)) base, r x n.
  RowScaled<RatFun> W;
  RowScaled<Poly> P;
  RFMatrix Dplus;
  RegionPair regions;
  SmithMcMillan smm;
  SplitDecomposition split;
  ReductionTrace trace;
  Certificate certificate;
  FactorDiagnostics diagnostics;
};

/// Phi = W* W with the poles of W outside regions.poles and its zeros
/// outside regions.zeros. Throws NotASpectrum, RankZero, OnCircleForbidden,
/// NumericFallbackExceededTolerance or InvariantViolation.
SpectralFactorization factorize(const RFMatrix& phi, const RegionPair& regions, const FactorizeOptions& opts = {});

/// Both regions {|z| > 1}; closed when Phi is analytic on the circle (poles)
/// and also of constant rank there (zeros).
RegionPair youla_regions(const RFMatrix& phi, double tol = 1e-9);
SpectralFactorization factorize_youla(const RFMatrix& phi, const FactorizeOptions& opts = {});

struct VerificationReport {
  /// Phi - W* W == 0 exactly.
  bool exact_residual_zero = false;
  double sampled_residual = 0.0;
  bool residual_ok = false;
  PoleZeroSummary w;
  bool poles_ok = false;
  bool zeros_ok = false;
  int mcmillan_phi = 0;
  int mcmillan_w = 0;
  bool minimal = false;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Exact checks on W: meant for factors with exact coefficients. A factor
/// from the approximate path is not minimal in exact arithmetic and should
/// be judged by its FactorDiagnostics instead.
VerificationReport verify(const RFMatrix& phi, const RowScaled<RatFun>& w, const RegionPair& regions,
                          double tol = 1e-9, std::size_t grid = 512);
VerificationReport verify(const RFMatrix& phi, const RFMatrix& w, const RegionPair& regions, double tol = 1e-9,
                          std::size_t grid = 512);

/// T = W1 W2^-R = diag(sqrt(left)) M diag(1/sqrt(right)).
struct OrthogonalRelation {
  RatMatrix M;
  std::vector<Rat> left;
  std::vector<Rat> right;

  /// M itself when all scales are 1.
  std::optional<RatMatrix> exact() const;
  Eigen::MatrixXd numeric() const;
};

/// The constant orthogonal T with W1 = T W2, or nullopt when none exists.
/// Orthogonality is checked exactly.
std::optional<OrthogonalRelation> orthogonal_relator(const RowScaled<RatFun>& w1, const RowScaled<RatFun>& w2);
std::optional<OrthogonalRelation> orthogonal_relator(const RFMatrix& w1, const RFMatrix& w2);
/// For factors from the approximate path: T sampled as W1(z) W2(z)^+ on grid
/// points of the unit circle, accepted when the samples agree, T is real and
/// T^T T = I, all within tol.
std::optional<Eigen::MatrixXd> numeric_relator(const RowScaled<RatFun>& w1, const RowScaled<RatFun>& w2,
                                               double tol = 1e-12, std::size_t grid = 16);

/// L = V [I_r; 0] W. Throws NotParaUnitary.
RFMatrix compose_parametrization(const RFMatrix& w, const RFMatrix& v);

/// Phi = W W*, with W = base diag(sqrt(col_scales)) (n x r).
struct DualFactorization {
  RFMatrix base;
  std::vector<Rat> col_scales;
  SpectralFactorization of_transpose;
};
DualFactorization dual_factorize(const RFMatrix& phi, const RegionPair& regions, const FactorizeOptions& opts = {});

/// For L-polynomial Phi: W is a polynomial in 1/z when infinity is in the
/// pole region and a polynomial in z when 0 is.
bool lpoly_specialization_check(const LPolyMatrix& phi, const SpectralFactorization& result);

/// The Gram form B* diag(scales) B of a row-scaled factor.
RFMatrix gram(const RowScaled<RatFun>& w);

}  // namespace specfact

#endif  // SPECFACT_FACTORIZER_HPP
