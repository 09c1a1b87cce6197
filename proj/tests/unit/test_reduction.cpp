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

#include "worked_example.hpp"
#include "specfact/error.hpp"
#include "specfact/polymatrix.hpp"
#include "specfact/reduction.hpp"

using namespace specfact;
using namespace specfact::testing;

namespace {

// star(B) diag(s) B, the Gram form of a row-scaled factor.
LPolyMatrix lift(const RatMatrix& m) { return to_lpoly(to_poly_matrix(m)); }
LPolyMatrix lift(const PolyMatrix& m) { return to_lpoly(m); }

template <class T>
LPolyMatrix gram(const RowScaled<T>& f) {
  LPolyMatrix b = lift(f.base);
  LPolyMatrix s(b.rows(), b.rows());
  for (std::size_t i = 0; i < b.rows(); ++i) s(i, i) = LPoly(f.scales[i]);
  return star(b) * s * b;
}


std::optional<ErrorCode> code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("primitive integer vector") {
  CHECK(primitive_integer_vector({q(-9, 2), q(1)}) == std::vector<Rat>{q(9), q(-2)});
  CHECK(primitive_integer_vector({q(0), q(-2, 3), q(4, 9)}) == std::vector<Rat>{q(0), q(3), q(-2)});
  CHECK(primitive_integer_vector({q(0), q(0)}) == std::vector<Rat>{q(0), q(0)});
}

TEST_CASE("first step on the worked example") {
  auto res = reduce_step(worked_psi1());
  REQUIRE(std::holds_alternative<std::pair<ReductionStep, LPolyMatrix>>(res));
  const auto& [step, next] = std::get<std::pair<ReductionStep, LPolyMatrix>>(res);
  CHECK(step.v == std::vector<Rat>{q(9), q(-2)});
  CHECK(step.pivot == 1);
  CHECK(step.K_before == std::vector<int>{1, 3});
  CHECK(step.omega_inv(0, 1) == P({"0", "0", "-9/2"}));
  CHECK(step.omega(0, 1) == P({"0", "0", "9/2"}));
  CHECK(step.K_after[1] < 3);
  CHECK((step.omega * step.omega_inv) == PolyMatrix::identity(2));
  CHECK(is_para_hermitian(next));
  CHECK(det(next) == det(worked_psi1()));
}

TEST_CASE("last step of the worked example") {
  auto res = reduce_step(worked_psi4());
  REQUIRE(std::holds_alternative<std::pair<ReductionStep, LPolyMatrix>>(res));
  const auto& [step, next] = std::get<std::pair<ReductionStep, LPolyMatrix>>(res);
  CHECK(step.v == std::vector<Rat>{q(2), q(-1)});
  CHECK(step.pivot == 0);
  CHECK(step.omega_inv(1, 0) == P({"0", "-1/2"}));
  CHECK(next == lift(worked_psi5()));
  auto fin = reduce_step(next);
  REQUIRE(std::holds_alternative<Constant>(fin));
  CHECK(std::get<Constant>(fin).value == worked_psi5());
}

TEST_CASE("smallest-index pivot on the worked example") {
  ReductionTrace t = reduce(worked_psi1());
  REQUIRE(t.steps.size() == 4);
  // Both columns of Psi_3 have degree 1, so the rule picks column 0 here.
  CHECK(t.psi_sequence[2] == star(t.psi_sequence[2]));
  CHECK(t.steps[2].pivot == 0);
  CHECK(t.psi_final == RatMatrix(2, 2, {q(5, 16), q(-1, 4), q(-1, 4), q(1)}));
  CHECK(t.C.scales == std::vector<Rat>{q(5, 16), q(4, 5)});
  CHECK(t.C.base.transpose() * RatMatrix::diagonal(t.C.scales) * t.C.base == t.psi_final);
  CHECK(gram(assemble_P(t)) == worked_psi1());
}

TEST_CASE("largest-index pivot follows the printed trace") {
  ReductionTrace t = reduce(worked_psi1(), ReductionOptions{KernelChoice::FirstFree, PivotChoice::Largest, std::nullopt});
  REQUIRE(t.psi_sequence.size() == 5);
  CHECK(t.psi_sequence[3] == worked_psi4());
  CHECK(t.iteration_bound == 4);
  CHECK(t.steps.size() <= 4);
  CHECK(t.psi_final == worked_psi5());
  CHECK(t.det_psi == q(1, 4));
  CHECK(t.C.exact());
  CHECK(t.C.base == worked_C());
  for (std::size_t i = 0; i + 1 < t.psi_sequence.size(); ++i) {
    const auto& s = t.steps[i];
    CHECK(s.K_after[s.pivot] < s.K_before[s.pivot]);
    CHECK(t.psi_sequence[i + 1] == star(to_lpoly(s.omega_inv)) * t.psi_sequence[i] * to_lpoly(s.omega_inv));
  }
  RowScaled<Poly> p = assemble_P(t);
  CHECK(p.exact());
  CHECK(gram(p) == worked_psi1());
  CHECK(p.base == worked_P());
  CHECK(sqrt_residual(t) == 0.0);
}

TEST_CASE("both kernel choices give a factor") {
  for (KernelChoice k : {KernelChoice::FirstFree, KernelChoice::LastFree}) {
    ReductionTrace t = reduce(worked_psi1(), ReductionOptions{k, PivotChoice::Smallest, std::nullopt});
    CHECK(gram(assemble_P(t)) == worked_psi1());
  }
}

TEST_CASE("ldl") {
  LDL f = ldl(worked_psi5());
  CHECK(f.Dc == std::vector<Rat>{q(1, 4), q(1)});
  CHECK(f.L(1, 0) == q(-4));
  RowScaled<Rat> c = ldl_sqrt(f);
  CHECK(c.base == worked_C());

  RowScaled<Rat> two = ldl_sqrt(ldl(RatMatrix(1, 1, {q(2)})));
  CHECK_FALSE(two.exact());
  CHECK(two.scales[0] == q(2));
  CHECK(two.base(0, 0) == q(1));

  CHECK(code_of([] { ldl(RatMatrix(2, 2, {q(1), q(2), q(2), q(1)})); }) == ErrorCode::NotPositiveDefinite);
  CHECK(code_of([] { ldl(RatMatrix(2, 2, {q(1), q(2), q(0), q(1)})); }) == ErrorCode::NotPositiveDefinite);
}

TEST_CASE("residual of an irrational square root") {
  ReductionTrace t = reduce(lift(RatMatrix(2, 2, {q(2), q(1), q(1), q(3)})));
  CHECK(t.steps.empty());
  CHECK_FALSE(t.C.exact());
  CHECK(sqrt_residual(t) < 1e-60);
  CHECK(gram(assemble_P(t)) == lift(t.psi_final));
}

TEST_CASE("random unimodular congruences reduce back to constants") {
  RandomRat rnd(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 2;
    // Psi = star(M) A M with A symmetric positive definite and M unimodular.
    RatMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b(i, j) = rnd(5, 3);
    RatMatrix a = b.transpose() * b + RatMatrix::identity(n);
    PolyMatrix m = PolyMatrix::identity(n);
    for (int k = 0; k < 3; ++k) {
      PolyMatrix e = PolyMatrix::identity(n);
      std::size_t i = static_cast<std::size_t>(rnd.engine()() % n);
      std::size_t j = (i + 1 + static_cast<std::size_t>(rnd.engine()() % (n - 1))) % n;
      e(i, j) = Poly::monomial(rnd.nonzero(4, 2), static_cast<std::size_t>(rnd.engine()() % 3));
      m = e * m;
    }
    LPolyMatrix mm = to_lpoly(m);
    LPolyMatrix psi = star(mm) * lift(a) * mm;
    ReductionTrace t = reduce(psi);
    CHECK(static_cast<int>(t.steps.size()) <= t.iteration_bound);
    CHECK(det(lift(t.psi_final)) == det(psi));
    RowScaled<Poly> p = assemble_P(t);
    CHECK(gram(p) == psi);
    CHECK(is_unimodular(p.base));
  }
}

TEST_CASE("reduce rejects bad input") {
  LPolyMatrix nonherm(2, 2);
  nonherm(0, 0) = L(0, {"1"});
  nonherm(0, 1) = L(0, {"0", "1"});
  nonherm(1, 1) = L(0, {"1"});
  CHECK(code_of([&] { reduce(nonherm); }) == ErrorCode::InvariantViolation);
  LPolyMatrix nonconst(1, 1);
  nonconst(0, 0) = L(-1, {"-2", "5", "-2"});
  CHECK(code_of([&] { reduce(nonconst); }) == ErrorCode::InvariantViolation);
}
