// Copyright 2026 The demikit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include <benchmark/benchmark.h>

#include "demikit/complex.hpp"
#include "demikit/constructions.hpp"
#include "demikit/simplicial.hpp"

namespace demikit {
namespace {

Complex projective_plane() {
  std::vector<Mask> facets;
  for (const char* f : {"124", "234", "345", "135", "125", "256", "236", "136", "146", "456"}) {
    facets.push_back(mask_from_label(f));
  }
  return Complex::from_facets(6, facets);
}

void BM_ReducedHomology(benchmark::State& state) {
  const Complex d = projective_plane();
  const FieldSpec field = state.range(0) == 0 ? FieldSpec::rationals() : FieldSpec::prime(2);
  for (auto _ : state) benchmark::DoNotOptimize(reduced_homology_dims(d, field));
}
BENCHMARK(BM_ReducedHomology)->Arg(0)->Arg(2);

void BM_HochsterBetti(benchmark::State& state) {
  const Complex d = projective_plane();
  for (auto _ : state) benchmark::DoNotOptimize(hochster_betti(d, FieldSpec::rationals()));
}
BENCHMARK(BM_HochsterBetti);

void BM_BettiRoute(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const RankTable m = random_demimatroid(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(w_via_betti(m));
}
BENCHMARK(BM_BettiRoute)->DenseRange(4, 7);

}  // namespace
}  // namespace demikit
