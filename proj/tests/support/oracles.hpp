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
#ifndef SPECFACT_ORACLES_HPP
#define SPECFACT_ORACLES_HPP

// Reference computations that share no code path with the library's
// canonical forms.

#include <algorithm>
#include <functional>
#include <vector>

#include "specfact/matrix.hpp"

namespace specfact::testing {

/// Determinant by cofactor expansion along the first row.
inline RatFun cofactor_det(const RFMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  RatFun acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    RFMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) minor(i - 1, c++) = m(i, k);
    RatFun term = m(0, j) * cofactor_det(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

inline void for_each_minor(const RFMatrix& g, const std::function<void(const RatFun&)>& fn) {
  const std::size_t m = g.rows(), n = g.cols();
  for (std::size_t k = 1; k <= std::min(m, n); ++k) {
    std::vector<bool> rsel(m, false), csel(n, false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<std::ptrdiff_t>(k), true);
      do {
        RFMatrix sub(k, k);
        for (std::size_t i = 0, a = 0; i < m; ++i) {
          if (!rsel[i]) continue;
          for (std::size_t j = 0, b = 0; j < n; ++j)
            if (csel[j]) sub(a, b++) = g(i, j);
          ++a;
        }
        fn(cofactor_det(sub));
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
  }
}

/// McMillan degree from minors: degree of the lcm of all minor denominators
/// plus the largest pole order at infinity among the minors.
inline int mcmillan_degree_by_minors(const RFMatrix& g) {
  Poly den(Rat(1));
  int at_inf = 0;
  for_each_minor(g, [&](const RatFun& f) {
    if (f.is_zero()) return;
    den = lcm(den, f.den());
    at_inf = std::max(at_inf, f.num().degree() - f.den().degree());
  });
  return den.degree() + at_inf;
}

/// Normal rank by the largest nonvanishing minor.
inline std::size_t rank_by_minors(const RFMatrix& g) {
  std::size_t r = 0;
  const std::size_t m = g.rows(), n = g.cols();
  for (std::size_t k = 1; k <= std::min(m, n); ++k) {
    bool any = false;
    RFMatrix dummy;
    std::vector<bool> rsel(m, false), csel(n, false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<std::ptrdiff_t>(k), true);
      do {
        RFMatrix sub(k, k);
        for (std::size_t i = 0, a = 0; i < m; ++i) {
          if (!rsel[i]) continue;
          for (std::size_t j = 0, b = 0; j < n; ++j)
            if (csel[j]) sub(a, b++) = g(i, j);
          ++a;
        }
        if (!cofactor_det(sub).is_zero()) any = true;
      } while (!any && std::prev_permutation(csel.begin(), csel.end()));
    } while (!any && std::prev_permutation(rsel.begin(), rsel.end()));
    if (!any) break;
    r = k;
  }
  return r;
}

}  // namespace specfact::testing

#endif  // SPECFACT_ORACLES_HPP
