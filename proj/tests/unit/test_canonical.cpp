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

#include "oracles.hpp"
#include "worked_example.hpp"
#include "specfact/canonical.hpp"
#include "specfact/polymatrix.hpp"

using namespace specfact;
using namespace specfact::testing;

namespace {

PolyMatrix random_poly_matrix(RandomRat& rnd, std::size_t m, std::size_t n, int maxdeg) {
  PolyMatrix g(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = rnd.poly(rnd.uniform(-1, maxdeg));
  return g;
}

void check_smith(const PolyMatrix& g, const SmithForm& sf) {
  CHECK(sf.U * g * sf.V == sf.S);
  CHECK(sf.U * sf.Uinv == PolyMatrix::identity(g.rows()));
  CHECK(sf.V * sf.Vinv == PolyMatrix::identity(g.cols()));
  CHECK(det(sf.U).degree() == 0);
  CHECK(det(sf.V).degree() == 0);
  for (std::size_t i = 0; i < sf.S.rows(); ++i)
    for (std::size_t j = 0; j < sf.S.cols(); ++j)
      if (i != j || i >= sf.rank) CHECK(sf.S(i, j).is_zero());
  for (std::size_t i = 0; i < sf.rank; ++i) {
    CHECK(sf.S(i, i).is_monic());
    if (i + 1 < sf.rank) CHECK(divides(sf.S(i, i), sf.S(i + 1, i + 1)));
  }
}

}  // namespace

TEST_CASE("smith form") {
  SUBCASE("identity") {
    SmithForm sf = smith_form(PolyMatrix::identity(3));
    CHECK(sf.S == PolyMatrix::identity(3));
    CHECK(sf.U == PolyMatrix::identity(3));
    CHECK(sf.V == PolyMatrix::identity(3));
  }
  SUBCASE("already canonical") {
    PolyMatrix g = PolyMatrix::diagonal({P({"0", "1"}), P({"0", "0", "1"})});
    SmithForm sf = smith_form(g);
    CHECK(sf.S == g);
    CHECK(sf.U == PolyMatrix::identity(2));
    CHECK(sf.V == PolyMatrix::identity(2));
  }
  SUBCASE("one column operation") {
    PolyMatrix g(1, 2);
    g(0, 0) = P({"0", "1"});
    g(0, 1) = P({"0", "1"});
    SmithForm sf = smith_form(g);
    CHECK(sf.S(0, 0) == P({"0", "1"}));
    CHECK(sf.S(0, 1).is_zero());
    check_smith(g, sf);
  }
  SUBCASE("coprime diagonal needs the divisibility fixup") {
    PolyMatrix g = PolyMatrix::diagonal({P({"-1", "1"}), P({"-2", "1"})});
    SmithForm sf = smith_form(g);
    CHECK(sf.S(0, 0) == Poly(q(1)));
    CHECK(sf.S(1, 1) == prod_linear({q(1), q(2)}));
    check_smith(g, sf);
  }
  SUBCASE("randomized") {
    RandomRat rnd(23);
    for (int t = 0; t < 40; ++t) {
      std::size_t m = static_cast<std::size_t>(rnd.uniform(1, 4)), n = static_cast<std::size_t>(rnd.uniform(1, 4));
      PolyMatrix g = random_poly_matrix(rnd, m, n, 3);
      if (g.is_zero()) continue;
      SmithForm sf = smith_form(g);
      check_smith(g, sf);
      CHECK(sf.rank == rank_by_minors(to_rf(g)));
    }
  }
}

TEST_CASE("smith-mcmillan") {
  SUBCASE("worked example") {
    RFMatrix phi = worked_phi();
    SmithMcMillan smm = smith_mcmillan(phi);
    CHECK(smm.rank == 2);
    CHECK(smm.D == worked_D());
    CHECK(smm.reassemble() == phi);
    CHECK(det(smm.C.block(0, 0, 2, 2)).degree() <= 0);
    CHECK(smm.F * smm.F_right_inverse == PolyMatrix::identity(2));
    CHECK(smm.C_left_inverse * smm.C == PolyMatrix::identity(2));
  }
  SUBCASE("identity") {
    SmithMcMillan smm = smith_mcmillan(RFMatrix::identity(2));
    CHECK(smm.D == RFMatrix::identity(2));
    CHECK(smm.C == PolyMatrix::identity(2));
    CHECK(smm.F == PolyMatrix::identity(2));
  }
  SUBCASE("scalar") {
    RFMatrix g(1, 1);
    g(0, 0) = RatFun(Poly(q(1)), P({"-2", "1"}));
    CHECK(smith_mcmillan(g).D == g);
  }
  SUBCASE("randomized reassembly and divisibility chains") {
    RandomRat rnd(29);
    for (int t = 0; t < 30; ++t) {
      std::size_t m = static_cast<std::size_t>(rnd.uniform(1, 3)), n = static_cast<std::size_t>(rnd.uniform(1, 3));
      RFMatrix g(m, n);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
          g(i, j) = RatFun(rnd.poly(rnd.uniform(-1, 3)), prod_linear({q(rnd.uniform(-2, 2), 2)}));
      if (g.is_zero()) continue;
      SmithMcMillan smm = smith_mcmillan(g);
      CHECK(smm.reassemble() == g);
      CHECK(smm.rank == rank_by_minors(g));
      for (std::size_t i = 0; i + 1 < smm.rank; ++i) {
        CHECK(divides(smm.eps[i], smm.eps[i + 1]));
        CHECK(divides(smm.psi[i + 1], smm.psi[i]));
      }
      for (std::size_t i = 0; i < smm.rank; ++i) CHECK(gcd(smm.eps[i], smm.psi[i]).degree() == 0);
      CHECK(mcmillan_degree(g) == mcmillan_degree_by_minors(g));
    }
  }
}

TEST_CASE("structural indices") {
  RFMatrix phi = worked_phi();
  SmithMcMillan smm = smith_mcmillan(phi);
  CHECK(structural_indices(smm, RootPoint::at(q(0))).indices == std::vector<int>{-1, 1});
  CHECK(structural_indices(smm, RootPoint::at(q(1))).indices == std::vector<int>{0, 2});
  CHECK(structural_indices(smm, RootPoint::at(q(3))).indices == std::vector<int>{0, 0});
  // Even on-circle indices, as every spectrum must have.
  for (int v : structural_indices(smm, RootPoint::at(q(1))).indices) CHECK(v % 2 == 0);
  CHECK(structural_indices(phi, RootPoint::infinity()).indices == std::vector<int>{-1, 1});
}

TEST_CASE("mcmillan degree") {
  CHECK(mcmillan_degree(worked_phi()) == 4);
  CHECK(mcmillan_degree_by_minors(worked_phi()) == 4);
  CHECK(mcmillan_degree(worked_w()) == 2);
  CHECK(mcmillan_degree_by_minors(worked_w()) == 2);
  CHECK(mcmillan_degree(RFMatrix::identity(3)) == 0);
}

TEST_CASE("unimodular inverses") {
  CHECK(unimodular_right_inverse(PolyMatrix::identity(2)) == PolyMatrix::identity(2));
  PolyMatrix f(1, 2);
  f(0, 0) = P({"1"});
  f(0, 1) = P({"0", "1"});
  PolyMatrix r = unimodular_right_inverse(f);
  CHECK(f * r == PolyMatrix::identity(1));
  CHECK(r(0, 0) == P({"1"}));
  CHECK(r(1, 0).is_zero());
  PolyMatrix t(2, 2);
  t(0, 0) = P({"1"});
  t(0, 1) = P({"0", "1"});
  t(1, 1) = P({"1"});
  PolyMatrix ti = unimodular_right_inverse(t);
  CHECK(ti(0, 1) == P({"0", "-1"}));
  CHECK(t * ti == PolyMatrix::identity(2));
  CHECK(unimodular_left_inverse(t.transpose()) * t.transpose() == PolyMatrix::identity(2));
  PolyMatrix bad = PolyMatrix::diagonal({P({"-1", "1"}), P({"1"})});
  CHECK_THROWS_AS(unimodular_right_inverse(bad), Error);
}
