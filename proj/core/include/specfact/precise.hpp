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
#ifndef SPECFACT_PRECISE_HPP
#define SPECFACT_PRECISE_HPP

// Numeric fallback for irrational roots. Values stay rationals, rounded to
// kPreciseBits significant bits, so the exact machinery runs unchanged on
// them.

#include <complex>
#include <gmpxx.h>
#include <optional>
#include <vector>

#include "specfact/lpoly.hpp"
#include "specfact/matrix.hpp"

namespace specfact {

inline constexpr mp_bitcnt_t kPreciseBits = 320;
/// Relative size below which fallback coefficients count as rounding noise.
inline constexpr double kPreciseDrop = 1e-40;
/// Kernel entries below this, relative to the largest, are set to zero.
inline constexpr double kKernelDrop = 1e-30;

Rat round_precise(const Rat& x);
/// Rounds every coefficient and zeroes those below drop_rel times the largest.
LPoly round_precise(const LPoly& p, double drop_rel = kPreciseDrop);

/// Monic prod (z - r) over the given roots of the square-free polynomial s,
/// each refined by Newton's method at kPreciseBits.
Poly precise_factor(const Poly& s, const std::vector<std::complex<long double>>& roots);

/// A kernel vector of m by Gauss-Jordan elimination at kPreciseBits, treating
/// pivots below rel_tol times the largest entry as zero. The free column is
/// the first or the last one; negligible entries are zeroed. nullopt when m has full column rank.
std::optional<std::vector<Rat>> precise_kernel(const RatMatrix& m, double rel_tol, bool last_free);

}  // namespace specfact

#endif  // SPECFACT_PRECISE_HPP
