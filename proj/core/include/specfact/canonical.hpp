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
#ifndef SPECFACT_CANONICAL_HPP
#define SPECFACT_CANONICAL_HPP

#include <cstddef>
#include <vector>

#include "specfact/matrix.hpp"
#include "specfact/ratfun.hpp"

namespace specfact {

/// U * G * V = S with S zero except for the monic invariant factors
/// S(i, i), i < rank, each dividing the next. U^-1 and V^-1 are tracked
/// alongside U and V.
struct SmithForm {
  PolyMatrix U, Uinv;
  PolyMatrix S;
  PolyMatrix V, Vinv;
  std::size_t rank = 0;
  std::vector<Poly> invariant_factors() const;
};

SmithForm smith_form(const PolyMatrix& g);

/// G = C * D * F with C (m x r) and F (r x n) unimodular polynomial matrices
/// and D = diag(eps_i / psi_i) canonic.
struct SmithMcMillan {
  PolyMatrix C;
  RFMatrix D;
  PolyMatrix F;
  std::vector<Poly> eps;
  std::vector<Poly> psi;
  std::size_t rank = 0;
  /// V(:, 0:r) and U(0:r, :) from the Smith form of the numerator.
  PolyMatrix F_right_inverse;
  PolyMatrix C_left_inverse;

  RFMatrix reassemble() const;
};

SmithMcMillan smith_mcmillan(const RFMatrix& g);

/// Entrywise f(z) -> f(1/z), no transpose.
RFMatrix substitute_reciprocal(const RFMatrix& g);

struct StructuralIndices {
  RootPoint point;
  std::vector<int> indices;
};

StructuralIndices structural_indices(const SmithMcMillan& smm, const RootPoint& pt);
/// Works for infinity by recomputing the form of G(1/lambda) at lambda = 0.
StructuralIndices structural_indices(const RFMatrix& g, const RootPoint& pt);

/// Degree of the pole at infinity: minus the sum of the negative structural
/// indices there.
int pole_degree_at_infinity(const RFMatrix& g);
int mcmillan_degree(const RFMatrix& g);
int mcmillan_degree(const SmithMcMillan& smm, const RFMatrix& g);

/// Polynomial right inverse of a unimodular r x n matrix (F * R = I_r).
/// Throws Error(NotUnimodular) when an invariant factor is nonconstant or the
/// rank is short.
PolyMatrix unimodular_right_inverse(const PolyMatrix& f);
/// Polynomial left inverse of a unimodular n x r matrix (L * C = I_r).
PolyMatrix unimodular_left_inverse(const PolyMatrix& c);

}  // namespace specfact

#endif  // SPECFACT_CANONICAL_HPP
