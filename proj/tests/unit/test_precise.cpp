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
#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "specfact/factorizer.hpp"
#include "specfact/precise.hpp"

using namespace specfact;
using namespace specfact::testing;

TEST_CASE("rounding keeps about 320 bits") {
  const Rat third(1, 3);
  const Rat r = round_precise(third);
  CHECK(r != third);
  CHECK(abs(r - third) < Rat(1, 3) * Rat(Int(1), Int(1) << 300));
  CHECK(round_precise(Rat(5, 8)) == Rat(5, 8));
}

TEST_CASE("rounding drops coefficients far below the largest") {
  LPoly p(-1, {Rat(1), Rat(Int(1), Int(1) << 200), Rat(3)});
  LPoly q = round_precise(p);
  CHECK(q.coeff_at(0) == 0);
  CHECK(q.coeff_at(-1) == 1);
  CHECK(q.coeff_at(1) == 3);
}

TEST_CASE("refined factor of z^2 - 2") {
  const Poly s({Rat(-2), Rat(0), Rat(1)});
  auto roots = numeric_roots(s);
  std::vector<std::complex<long double>> pos;
  for (const auto& r : roots)
    if (r.real() > 0) pos.push_back(r);
  Poly f = precise_factor(s, pos);
  REQUIRE(f.degree() == 1);
  const Rat root = -f.coeff(0);
  CHECK(abs(root * root - Rat(2)) < Rat(Int(1), Int(1) << 300));
}

TEST_CASE("conjugate pair gives a real quadratic") {
  const Poly s({Rat(2), Rat(1), Rat(1)});
  Poly f = precise_factor(s, numeric_roots(s));
  REQUIRE(f.degree() == 2);
  for (std::size_t i = 0; i <= 2; ++i) CHECK(abs(f.coeff(i) - s.coeff(i)) < Rat(Int(1), Int(1) << 300));
}

TEST_CASE("kernel by elimination") {
  RatMatrix m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 2;
  m(1, 1) = 4;
  auto v = precise_kernel(m, kPreciseDrop, false);
  REQUIRE(v);
  CHECK((*v)[0] == -2);
  CHECK((*v)[1] == 1);
  m(1, 1) = 5;
  CHECK_FALSE(precise_kernel(m, kPreciseDrop, false));
}

TEST_CASE("first and last free column") {
  RatMatrix m(1, 3);
  m(0, 0) = 1;
  m(0, 1) = 1;
  m(0, 2) = 1;
  auto a = precise_kernel(m, kPreciseDrop, false), b = precise_kernel(m, kPreciseDrop, true);
  REQUIRE(a);
  REQUIRE(b);
  CHECK(*a == std::vector<Rat>{Rat(-1), Rat(1), Rat(0)});
  CHECK(*b == std::vector<Rat>{Rat(-1), Rat(0), Rat(1)});
}

TEST_CASE("3x3 spectrum with irrational invariant factors") {
  const RegionPair outer{RegionSpec::outside(), RegionSpec::outside()};
  RandomRat rnd(555);
  LPolyMatrix m = random_lpoly_matrix(rnd, 3, 3, 1);
  const RFMatrix phi = to_rf(star(m) * m);
  FactorizeOptions first, last;
  last.reduction.kernel = KernelChoice::LastFree;
  last.reduction.pivot = PivotChoice::Largest;
  SpectralFactorization a = factorize(phi, outer, first), b = factorize(phi, outer, last);
  CHECK(a.trace.approximate);
  CHECK_FALSE(a.diagnostics.exact_path);
  REQUIRE(a.diagnostics.sampled_residual);
  CHECK(*a.diagnostics.sampled_residual <= 1e-9);
  CHECK(numeric_relator(b.W, a.W, 1e-12));
  CHECK(a.diagnostics.poles_ok);
  CHECK(a.diagnostics.zeros_ok);
}
