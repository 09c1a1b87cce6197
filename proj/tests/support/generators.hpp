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
#ifndef SPECFACT_GENERATORS_HPP
#define SPECFACT_GENERATORS_HPP

// Random spectra with known factors, shared by the unit and acceptance tests.

#include "specfact/polymatrix.hpp"
#include "test_util.hpp"

namespace specfact::testing {

/// A nonzero rational with |r| != 1, inside the unit disk when inside is set
/// and outside it otherwise.
inline Rat off_circle_root(RandomRat& rnd, bool inside) {
  for (;;) {
    Rat r = rnd.nonzero(7, 7);
    if (abs(r) == 1) continue;
    if ((abs(r) < 1) != inside) r = 1 / r;
    return r;
  }
}

/// c * prod(1 - r z^-1) as an L-polynomial.
inline LPoly lpoly_from_roots(const Rat& c, const std::vector<Rat>& roots) {
  Poly p = prod_linear(roots) * c;
  return LPoly(p, -static_cast<int>(roots.size()));
}

/// The factor of w* w with every root moved into the closed unit disk and no
/// pole at infinity: each (1 - r/z) with |r| > 1 becomes r (1 - 1/(r z)).
inline LPoly reflect_inside(const Rat& c, const std::vector<Rat>& roots) {
  Rat k = c;
  std::vector<Rat> in;
  for (const auto& r : roots) {
    if (abs(r) > 1) {
      k *= r;
      in.push_back(1 / r);
    } else {
      in.push_back(r);
    }
  }
  return lpoly_from_roots(k, in);
}

struct ScalarCase {
  LPoly w;
  RatFun phi;
};

/// phi = w* w with w = c prod(1 - r_i z^-1), 1 <= deg <= max_deg, roots inside.
inline ScalarCase random_scalar_case(RandomRat& rnd, int max_deg) {
  const int deg = rnd.uniform(1, max_deg);
  std::vector<Rat> roots;
  for (int i = 0; i < deg; ++i) roots.push_back(off_circle_root(rnd, true));
  LPoly w = lpoly_from_roots(rnd.nonzero(5, 3), roots);
  return {w, RatFun(star(w) * w)};
}

/// A random rows x cols L-polynomial matrix whose entries are
/// c z^-k prod(z - r) with rational roots, 0 <= k <= 1, degree <= max_deg.
inline LPolyMatrix random_lpoly_matrix(RandomRat& rnd, std::size_t rows, std::size_t cols, int max_deg) {
  LPolyMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const int deg = rnd.uniform(0, max_deg);
      std::vector<Rat> roots;
      for (int k = 0; k < deg; ++k) roots.push_back(rnd(4, 3));
      m(i, j) = LPoly(prod_linear(roots) * rnd.nonzero(3, 2), -rnd.uniform(0, 1));
    }
  return m;
}

}  // namespace specfact::testing

#endif  // SPECFACT_GENERATORS_HPP
