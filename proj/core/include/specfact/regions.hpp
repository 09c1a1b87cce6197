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
#ifndef SPECFACT_REGIONS_HPP
#define SPECFACT_REGIONS_HPP

#include <complex>
#include <string>
#include <vector>

#include "specfact/matrix.hpp"
#include "specfact/ratfun.hpp"

namespace specfact {

enum class Side { Inside, Outside };

/// An unmixed-symplectic set A: every pair-orbit {a, 1/a} off the unit circle
/// lies on the default side unless its inside representative is listed in
/// flips. With closed_circle the unit circle belongs to both A and A*.
struct RegionSpec {
  Side default_side = Side::Outside;
  bool closed_circle = false;
  /// Monic square-free factors with every root strictly inside the unit
  /// circle. The factor z flips the orbit {0, inf}.
  std::vector<Poly> flips;

  static RegionSpec outside() { return {}; }
  static RegionSpec inside() { return {Side::Inside, false, {}}; }

  /// Throws Error(InvalidRegion).
  void validate() const;
  bool contains_zero() const;
  bool contains_infinity() const { return !contains_zero(); }
  /// The orbit keyed by the inside factor f is flipped when f divides the
  /// product of the flips.
  bool is_flipped(const Poly& inside_factor) const;
};

struct RegionPair {
  RegionSpec poles;
  RegionSpec zeros;
  void validate() const {
    poles.validate();
    zeros.validate();
  }
};

enum class Membership { InA, InStar, OnCircle };
std::string to_string(Membership m);

/// Where a point falls relative to A. Points are 0, infinity, an exact
/// rational or a factor whose roots share one side of the circle.
/// Throws Error(OnCircleAmbiguous) for an on-circle point of an open region.
Membership membership(const RegionSpec& spec, const RootPoint& pt);

/// Roots of p (p != 0), polished in extended precision.
std::vector<std::complex<long double>> numeric_roots(const Poly& p);

struct CircleSplit {
  Poly inside, on, outside;
  bool approximate = false;
};

/// p = inside * on * outside (exactly unless approximate) for monic p != 0.
CircleSplit split_circle(const Poly& p, double tol = 1e-9);

/// z^deg(p) p(1/z) / p(0), monic; requires p(0) != 0.
Poly reciprocal_monic(const Poly& p);

/// The part of p built from roots of the factors in fs (full multiplicity)
/// and the rest.
std::pair<Poly, Poly> extract_factors(const Poly& p, const std::vector<Poly>& fs);

/// Roots of p grouped by where they fall relative to A.
struct RootClassification {
  Poly in_region{Rat(1)};
  Poly in_star{Rat(1)};
  Poly on_circle{Rat(1)};
  bool approximate = false;
};
RootClassification classify_roots(const RegionSpec& spec, const Poly& p, double tol = 1e-9);

/// D = Sigma Lambda* Theta* Theta Lambda with Sigma_k = alpha_k z^(k_k).
struct SplitDecomposition {
  std::vector<LPoly> sigma;
  std::vector<RatFun> lambda;
  std::vector<RatFun> theta;
  bool approximate = false;

  RFMatrix Sigma() const;
  RFMatrix Lambda() const;
  RFMatrix Theta() const;
  /// Theta * Lambda.
  RFMatrix Dplus() const;
  RFMatrix reassemble() const;
};

/// Splits a canonic diagonal D (given by its eps_k / psi_k) per the regions.
/// Throws OddOnCircleMultiplicity, OnCircleForbidden, NotASpectrum (Sigma not
/// a monomial) or UnresolvableCircleProximity.
SplitDecomposition split_diagonal(const std::vector<Poly>& eps, const std::vector<Poly>& psi,
                                  const RegionPair& regions, double tol = 1e-9);
SplitDecomposition split_diagonal(const RFMatrix& D, const RegionPair& regions, double tol = 1e-9);

/// Approximate-path helpers: a rational function that is a Laurent
/// polynomial up to rounding, recovered by division with a relative
/// remainder check against tol, then rounded to the fallback precision.
/// Throws NumericFallbackExceededTolerance.
LPoly approx_lpoly(const RatFun& f, double tol);

}  // namespace specfact

#endif  // SPECFACT_REGIONS_HPP
