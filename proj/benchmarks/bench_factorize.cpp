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
#include <benchmark/benchmark.h>

#include "generators.hpp"
#include "worked_example.hpp"
#include "specfact/factorizer.hpp"

using namespace specfact;
using namespace specfact::testing;

namespace {

const RegionPair kOuter{RegionSpec::outside(), RegionSpec::outside()};

void BM_SmithMcMillanWorkedExample(benchmark::State& state) {
  const RFMatrix phi = worked_phi();
  for (auto _ : state) benchmark::DoNotOptimize(smith_mcmillan(phi));
}
BENCHMARK(BM_SmithMcMillanWorkedExample);

void BM_FactorizeWorkedExample(benchmark::State& state) {
  const RFMatrix phi = worked_phi();
  const RegionPair regions{RegionSpec::outside(), RegionSpec::inside()};
  for (auto _ : state) benchmark::DoNotOptimize(factorize(phi, regions));
}
BENCHMARK(BM_FactorizeWorkedExample)->Unit(benchmark::kMillisecond);

void BM_FactorizeScalar(benchmark::State& state) {
  RandomRat rnd(7);
  ScalarCase c = random_scalar_case(rnd, static_cast<int>(state.range(0)));
  const RFMatrix phi(1, 1, {c.phi});
  for (auto _ : state) benchmark::DoNotOptimize(factorize(phi, kOuter));
}
BENCHMARK(BM_FactorizeScalar)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_FactorizeRational2x3(benchmark::State& state) {
  RandomRat rnd(4242);
  LPolyMatrix m = random_lpoly_matrix(rnd, 2, 3, 2);
  const RFMatrix phi = to_rf(star(m) * m);
  for (auto _ : state) benchmark::DoNotOptimize(factorize(phi, kOuter));
}
BENCHMARK(BM_FactorizeRational2x3)->Unit(benchmark::kMillisecond);

// Irrational invariant factors: the precise fallback.
void BM_FactorizeIrrational3x3(benchmark::State& state) {
  RandomRat rnd(555);
  LPolyMatrix m = random_lpoly_matrix(rnd, 3, 3, 1);
  const RFMatrix phi = to_rf(star(m) * m);
  for (auto _ : state) benchmark::DoNotOptimize(factorize(phi, kOuter));
}
BENCHMARK(BM_FactorizeIrrational3x3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
