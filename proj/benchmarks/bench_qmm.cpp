// Copyright 2026 The qmm Authors
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
#include <benchmark/benchmark.h>

#include "qmm/bound.hpp"
#include "qmm/covariant.hpp"
#include "qmm/divergence.hpp"
#include "qmm/group.hpp"
#include "qmm/quantum.hpp"
#include "qmm/random.hpp"

namespace {

void BM_Fidelity(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  qmm::Rng rng(1);
  const auto a = qmm::random_mixed_state(d, d, rng);
  const auto b = qmm::random_mixed_state(d, d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(qmm::fidelity(a, b));
}
BENCHMARK(BM_Fidelity)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_ProgramCovariantMultimeter(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto rep = qmm::weyl_heisenberg(d);
  const auto m = qmm::covariant_multimeter(rep);
  qmm::Rng rng(2);
  const auto xi = qmm::covariant_program_state(qmm::DensityState::basis(d, 0), qmm::random_pure_state(d, rng));
  for (auto _ : state) benchmark::DoNotOptimize(qmm::program(m, xi));
}
BENCHMARK(BM_ProgramCovariantMultimeter)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ObservableDivergence(benchmark::State& state) {
  qmm::Rng rng(3);
  const auto e1 = qmm::random_povm(2, 3, rng);
  const auto e2 = qmm::random_povm(2, 3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(qmm::observable_divergence(e1, e2).value);
}
BENCHMARK(BM_ObservableDivergence)->Unit(benchmark::kMillisecond);

void BM_SharpminBound(benchmark::State& state) {
  double t = -0.9;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qmm::sharpmin_bound(t));
    t = t > 0.9 ? -0.9 : t + 0.07;
  }
}
BENCHMARK(BM_SharpminBound)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
