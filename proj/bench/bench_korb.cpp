/*
   Copyright 2026 The korb Authors

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

// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "korb/korb.hpp"

namespace {

using korb::KOrbRing;
using korb::WeightVector;

const WeightVector& weights_for(std::int64_t index) {
  static const std::vector<WeightVector> table = {
      WeightVector({1, 2, 4}),
      WeightVector({2, 3, 5}),
      WeightVector({3, 4, 5, 7}),
  };
  return table.at(static_cast<std::size_t>(index));
}

using Multiply = korb::KOrbElement (*)(const KOrbRing&, const korb::KOrbElement&, const korb::KOrbElement&);
using Verify = korb::VerifyReport (*)(const KOrbRing&, std::size_t, std::uint64_t);

void run_star(benchmark::State& state, Multiply multiply) {
  const KOrbRing ring(weights_for(state.range(0)));
  auto rng = korb::trial_rng(1, 0);
  const auto x = ring.random_element(rng);
  const auto y = ring.random_element(rng);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(ring, x, y));
  state.SetLabel("ell=" + std::to_string(ring.ell()));
}

void run_verify(benchmark::State& state, Verify check) {
  const KOrbRing ring(weights_for(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check(ring, 50, 7));
  state.SetLabel("ell=" + std::to_string(ring.ell()));
}

void BM_StarMultiplyParallel(benchmark::State& state) { run_star(state, &korb::star_multiply); }
void BM_StarMultiplySerial(benchmark::State& state) { run_star(state, &korb::reference::star_multiply); }
void BM_VerifyParallel(benchmark::State& state) { run_verify(state, &korb::verify); }
void BM_VerifySerial(benchmark::State& state) { run_verify(state, &korb::reference::verify); }

std::vector<WeightVector> sweep_vectors() {
  std::vector<WeightVector> out;
  for (std::int64_t a = 1; a <= 12; ++a)
    for (std::int64_t b = a; b <= 12; ++b) out.push_back(WeightVector({a, b, 12}));
  return out;
}

void BM_TorsionSweepParallel(benchmark::State& state) {
  const auto vectors = sweep_vectors();
  for (auto _ : state) benchmark::DoNotOptimize(korb::torsion_sweep(vectors));
}

void BM_TorsionSweepSerial(benchmark::State& state) {
  const auto vectors = sweep_vectors();
  for (auto _ : state) benchmark::DoNotOptimize(korb::reference::torsion_sweep(vectors));
}

}  // namespace

BENCHMARK(BM_StarMultiplyParallel)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_StarMultiplySerial)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_VerifyParallel)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySerial)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TorsionSweepParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TorsionSweepSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
