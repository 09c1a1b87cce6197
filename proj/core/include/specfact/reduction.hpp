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
#ifndef SPECFACT_REDUCTION_HPP
#define SPECFACT_REDUCTION_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "specfact/canonical.hpp"
#include "specfact/matrix.hpp"
#include "specfact/regions.hpp"

namespace specfact {

/// diag(sqrt(scales)) * base. Rows whose scale is a rational square are folded
/// into base, so scales[i] == 1 marks an exact row.
template <class T>
struct RowScaled {
  std::vector<Rat> scales;
  Matrix<T> base;

  bool exact() const {
    for (const auto& s : scales)
      if (s != 1) return false;
    return true;
  }
};

/// Folds rational square roots of scales into the rows of base.
template <class T>
RowScaled<T> fold_squares(std::vector<Rat> scales, Matrix<T> base) {
  for (std::size_t i = 0; i < scales.size(); ++i) {
    if (auto r = exact_sqrt(scales[i])) {
      base.scale_row(i, T(*r));
      scales[i] = 1;
    }
  }
  return {std::move(scales), std::move(base)};
}

enum class KernelChoice { FirstFree, LastFree };
/// Which index of the highest max-degree active set becomes the pivot.
enum class PivotChoice { Smallest, Largest };

struct ReductionOptions {
  KernelChoice kernel = KernelChoice::FirstFree;
  PivotChoice pivot = PivotChoice::Smallest;
  /// Set on the approximate path: coefficients are rounded to doubles and
  /// terms below this relative size are dropped after every step.
  std::optional<double> numeric_tol;
};

struct ReductionStep {
  std::vector<Rat> v;
  std::size_t pivot = 0;
  PolyMatrix omega_inv;
  PolyMatrix omega;
  std::vector<int> K_before;
  std::vector<int> K_after;
};

struct Constant {
  RatMatrix value;
};
using StepResult = std::variant<Constant, std::pair<ReductionStep, LPolyMatrix>>;

struct LDL {
  RatMatrix L;
  std::vector<Rat> Dc;
};

struct ReductionTrace {
  std::vector<LPolyMatrix> psi_sequence;
  std::vector<ReductionStep> steps;
  RatMatrix psi_final;
  LDL ldl;
  /// C = diag(sqrt(Dc)) L^T.
  RowScaled<Rat> C;
  /// Sum of the column max-degrees of the first Psi.
  int iteration_bound = 0;
  Rat det_psi;
  bool approximate = false;
};

/// Psi = Sigma* D+ Xi D+^-1 with D+ = Theta Lambda and Xi = C* F^-R.
LPolyMatrix build_psi(const SmithMcMillan& smm, const SplitDecomposition& split, double tol = 1e-9);

/// One pass of the degree-reduction loop.
StepResult reduce_step(const LPolyMatrix& psi, const ReductionOptions& opts = {});

/// Runs the loop to a constant matrix, asserting the per-step invariants,
/// then factors the constant by LDL^T.
ReductionTrace reduce(const LPolyMatrix& psi, const ReductionOptions& opts = {});

/// Exact LDL^T of a symmetric positive definite rational matrix.
/// Throws Error(NotPositiveDefinite).
LDL ldl(const RatMatrix& a);
/// C = sqrt(Dc) L^T with rational square roots folded in.
RowScaled<Rat> ldl_sqrt(const LDL& f);

/// Q = L^T Omega_{h-1} ... Omega_1, so that Psi_1 = Q* diag(Dc) Q.
PolyMatrix assemble_Q(const ReductionTrace& trace);
/// P = diag(sqrt(Dc)) Q with rational square roots folded in.
RowScaled<Poly> assemble_P(const ReductionTrace& trace);

/// Max-norm of C^T C - Psi_final evaluated with 256-bit floats.
double sqrt_residual(const ReductionTrace& trace);

/// Primitive integer multiple with a positive first nonzero entry.
std::vector<Rat> primitive_integer_vector(const std::vector<Rat>& v);

}  // namespace specfact

#endif  // SPECFACT_REDUCTION_HPP
