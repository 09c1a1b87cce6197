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

#include "specfact/error.hpp"
#include "specfact/lpoly.hpp"
#include "specfact/poly.hpp"
#include "specfact/ratfun.hpp"
#include "test_util.hpp"

using namespace specfact;
using namespace specfact::testing;

TEST_CASE("rationals parse and print canonically") {
  CHECK(to_string(parse_rat("-6/4")) == "-3/2");
  CHECK_THROWS_AS(parse_rat("6/-4"), Error);
  CHECK(to_string(parse_rat("-10/5")) == "-2");
  CHECK(to_string(parse_rat("0/7")) == "0");
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK_THROWS_AS(parse_rat("1.5"), Error);
  CHECK_THROWS_AS(parse_rat(""), Error);
  CHECK(*exact_sqrt(q(9, 4)) == q(3, 2));
  CHECK_FALSE(exact_sqrt(q(2)).has_value());
  CHECK_FALSE(exact_sqrt(q(-1)).has_value());
  CHECK(*rationalize(0.3333333333333333, 1e-12) == q(1, 3));
  CHECK(*rationalize(-2.5, 1e-15) == q(-5, 2));
}

TEST_CASE("valuation") {
  SUBCASE("zero function has infinite valuation everywhere") {
    CHECK_FALSE(valuation(RatFun(), RootPoint::at(q(3))).has_value());
    CHECK_FALSE(valuation(RatFun(), RootPoint::infinity()).has_value());
  }
  SUBCASE("simple pole at the origin") {
    RatFun f(Poly(q(1)), prod_linear({q(0), q(1, 2)}));
    CHECK(*valuation(f, RootPoint::at(q(0))) == -1);
    CHECK(*valuation(f, RootPoint::at(q(1, 2))) == -1);
    CHECK(*valuation(f, RootPoint::at(q(5))) == 0);
  }
  SUBCASE("triple pole at infinity") {
    RatFun f(prod_linear({q(0), q(1), q(1)}));
    CHECK(*valuation(f, RootPoint::infinity()) == -3);
    CHECK(*valuation(f, RootPoint::at(q(1))) == 2);
  }
  SUBCASE("irreducible quadratic factor") {
    Poly z2p1 = P({"1", "0", "1"});
    RatFun f(z2p1 * z2p1, P({"0", "1"}));
    CHECK(*valuation(f, RootPoint::factor(z2p1)) == 2);
    CHECK(*valuation(f, RootPoint::at(q(0))) == -1);
  }
}

TEST_CASE("split_at_point") {
  auto [nu, cof] = split_at_point(P({"0", "-1", "1"}), q(0));
  CHECK(nu == 1);
  CHECK(cof == P({"-1", "1"}));
  auto [nu1, cof1] = split_at_point(Poly(q(1)), q(7, 3));
  CHECK(nu1 == 0);
  CHECK(cof1 == Poly(q(1)));
  auto [nu2, cof2] = split_at_point(prod_linear({q(2), q(2)}), q(2));
  CHECK(nu2 == 2);
  CHECK(cof2 == Poly(q(1)));
}

TEST_CASE("lpoly star") {
  CHECK(star(L(1, {"1"})) == L(-1, {"1"}));
  LPoly phi = L(-1, {"-2", "5", "-2"});
  CHECK(star(phi) == phi);
  CHECK(star(LPoly()).is_zero());
  LPoly p = L(-2, {"1", "0", "3", "-1/2"});
  CHECK(star(p) == L(-1, {"-1/2", "3", "0", "1"}));
  CHECK(p.min_degree() == -2);
  CHECK(p.max_degree() == 1);
}

TEST_CASE("lpoly arithmetic and exact division") {
  LPoly a = L(-1, {"-1", "1"});  // 1 - z^-1
  LPoly b = L(0, {"2", "-1"});   // 2 - z
  LPoly ab = a * b;
  CHECK(ab == L(-1, {"-2", "3", "-1"}));
  CHECK(exact_div(ab, a) == b);
  CHECK(exact_div(ab, LPoly::monomial(q(2), 3)) == L(-4, {"-1", "3/2", "-1/2"}));
  CHECK_FALSE(try_div(ab, L(0, {"3", "1"})).has_value());
  CHECK_THROWS_AS(exact_div(ab, L(0, {"3", "1"})), Error);
  CHECK((a - a).is_zero());
}

TEST_CASE("ratfun normal form and star") {
  RatFun f(P({"-2", "2"}), P({"-3", "0", "3"}));  // 2(z-1)/(3(z^2-1))
  CHECK(f.den() == P({"1", "1"}));
  CHECK(f.num() == Poly(q(2, 3)));
  RatFun g(P({"0", "0", "1"}), P({"-1/2", "1"}));  // z^2/(z - 1/2)
  RatFun gs = star(g);
  CHECK(gs.num() == Poly(q(-2)));
  CHECK(gs.den() == P({"0", "-2", "1"}));
  CHECK(star(gs) == g);
  CHECK((gs * RatFun(P({"0", "-2", "1"}))).is_constant());
  CHECK(RatFun(L(-2, {"1", "0", "1"})).to_lpoly() == L(-2, {"1", "0", "1"}));
}

TEST_CASE("gcd is monic and divides both arguments") {
  RandomRat rnd(7);
  for (int t = 0; t < 100; ++t) {
    Poly common = rnd.poly(rnd.uniform(0, 3));
    if (common.is_zero()) continue;
    Poly a = common * rnd.poly(rnd.uniform(0, 4));
    Poly b = common * rnd.poly(rnd.uniform(0, 4));
    if (a.is_zero() || b.is_zero()) continue;
    Poly g = gcd(a, b);
    CHECK(g.is_monic());
    CHECK(divides(g, a));
    CHECK(divides(g, b));
    CHECK(divides(common.monic(), g));
    // Coprime cofactors.
    CHECK(gcd(exact_div(a, g), exact_div(b, g)).degree() == 0);
  }
}

TEST_CASE("valuation is additive on products") {
  RandomRat rnd(11);
  for (int t = 0; t < 60; ++t) {
    std::vector<Rat> rf, rg;
    for (int i = rnd.uniform(0, 3); i > 0; --i) rf.push_back(q(rnd.uniform(-3, 3), rnd.uniform(1, 2)));
    for (int i = rnd.uniform(0, 3); i > 0; --i) rg.push_back(q(rnd.uniform(-3, 3), rnd.uniform(1, 2)));
    RatFun f(prod_linear(rf) * rnd.nonzero(), prod_linear({rnd(3, 2)}));
    RatFun g(prod_linear(rg), prod_linear({rnd(3, 2), rnd(3, 2)}));
    for (int k = -3; k <= 3; ++k) {
      RootPoint a = RootPoint::at(q(k, 2));
      CHECK(*valuation(f * g, a) == *valuation(f, a) + *valuation(g, a));
    }
    RootPoint inf = RootPoint::infinity();
    CHECK(*valuation(f * g, inf) == *valuation(f, inf) + *valuation(g, inf));
  }
}

TEST_CASE("star is an involution") {
  RandomRat rnd(13);
  for (int t = 0; t < 100; ++t) {
    std::vector<Rat> c;
    for (int i = rnd.uniform(0, 6); i > 0; --i) c.push_back(rnd());
    LPoly p(rnd.uniform(-4, 4), c);
    CHECK(star(star(p)) == p);
    RatFun f(rnd.poly(rnd.uniform(0, 3)), rnd.poly(rnd.uniform(0, 3)) + Poly::monomial(q(1), 4));
    CHECK(star(star(f)) == f);
  }
}

TEST_CASE("square-free decomposition") {
  Poly p = prod_linear({q(1), q(1), q(1, 2), q(-3), q(-3), q(-3)});
  auto parts = squarefree_decomposition(p);
  Poly back(q(1));
  for (auto& [s, i] : parts) back *= pow(s, static_cast<unsigned>(i));
  CHECK(back == p);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].second == 1);
  CHECK(parts[0].first == Poly::linear(q(1, 2)));
  CHECK(parts[2].first == Poly::linear(q(-3)));
}
