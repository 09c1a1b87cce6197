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
#ifndef SPECFACT_POLYMATRIX_HPP
#define SPECFACT_POLYMATRIX_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "specfact/matrix.hpp"

namespace specfact {

/// G^T(1/z).
RFMatrix star(const RFMatrix& g);
LPolyMatrix star(const LPolyMatrix& g);
LPolyMatrix star(const PolyMatrix& g);

/// Column maximum-degrees K_i and row minimum-degrees k_i (plus the other two
/// for completeness); nullopt marks a zero column or row.
struct DegreeProfile {
  std::vector<std::optional<int>> column_max;
  std::vector<std::optional<int>> column_min;
  std::vector<std::optional<int>> row_max;
  std::vector<std::optional<int>> row_min;
};
DegreeProfile degree_profile(const LPolyMatrix& g);

/// Coefficient matrices of the highest column degrees, lowest column degrees,
/// highest row degrees and lowest row degrees. hc/lc throw ZeroColumn on a zero
/// column, hr/lr throw ZeroColumn on a zero row.
RatMatrix hc_matrix(const LPolyMatrix& g);
RatMatrix lc_matrix(const LPolyMatrix& g);
RatMatrix hr_matrix(const LPolyMatrix& g);
RatMatrix lr_matrix(const LPolyMatrix& g);

bool is_para_hermitian(const RFMatrix& g);
bool is_para_hermitian(const LPolyMatrix& g);
bool is_para_unitary(const RFMatrix& g);
/// det g is a nonzero monomial alpha z^k.
bool is_L_unimodular(const LPolyMatrix& g);
/// det g is a nonzero constant.
bool is_unimodular(const PolyMatrix& g);

using ComplexMatrix = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic>;

/// Entrywise evaluation at x; nullopt when some denominator vanishes there
/// (relative magnitude below 1e-12).
std::optional<ComplexMatrix> evaluate(const RFMatrix& g, std::complex<double> x);
ComplexMatrix evaluate(const LPolyMatrix& g, std::complex<double> x);

struct SpectrumSample {
  double omega;
  double min_eigenvalue;
};

struct SpectrumReport {
  bool square = false;
  bool para_hermitian = false;
  /// Grid points skipped because Phi has a pole there.
  std::size_t undefined_samples = 0;
  double min_eigenvalue = 0.0;
  std::vector<SpectrumSample> failures;
  /// The check samples the circle; it is not a certificate.
  static constexpr const char* kNote = "sampled, not certified";
  bool ok() const { return square && para_hermitian && failures.empty(); }
};

/// Exact para-Hermitian test plus the Hermitian minimum eigenvalue at
/// omega_k = 2 pi k / grid, k = 0..grid-1, compared against -tol.
SpectrumReport spectrum_report(const RFMatrix& phi, std::size_t grid = 512, double tol = 1e-9);
inline bool is_spectrum(const RFMatrix& phi, std::size_t grid = 512, double tol = 1e-9) {
  return spectrum_report(phi, grid, tol).ok();
}

}  // namespace specfact

#endif  // SPECFACT_POLYMATRIX_HPP
