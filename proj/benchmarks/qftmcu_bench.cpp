// Copyright 2026 The qftmcu Authors
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

#include "qftmcu/qftmcu.hpp"

namespace {

using namespace qftmcu;

SynthConfig make(Method m, int n) {
  SynthConfig cfg;
  cfg.method = m;
  cfg.n = n;
  Rng rng(7);
  if (m != Method::McxQft) cfg.u = random_rational_unitary(rng, false);
  return cfg;
}

void BM_Synthesize(benchmark::State& state) {
  const SynthConfig cfg = make(static_cast<Method>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(synthesize(cfg));
}
BENCHMARK(BM_Synthesize)->ArgsProduct({{0, 1, 2, 3}, {8, 16, 32}});

void BM_CircuitUnitary(benchmark::State& state) {
  const Circuit c = synthesize(make(Method::McuMod, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(circuit_unitary(c));
}
BENCHMARK(BM_CircuitUnitary)->DenseRange(4, 9)->Unit(benchmark::kMillisecond);

void BM_Statevector(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Circuit c = synthesize(make(Method::McuZyz, n));
  const StateVector in = StateVector::basis(n, (std::size_t{1} << (n - 1)) - 1);
  for (auto _ : state) benchmark::DoNotOptimize(apply_statevector(c, in));
}
BENCHMARK(BM_Statevector)->Arg(12)->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_RouteLnn(benchmark::State& state) {
  const Circuit c = synthesize(make(Method::McuMod, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(route_lnn(c));
}
BENCHMARK(BM_RouteLnn)->Arg(8)->Arg(16)->Arg(24);

void BM_LowerToNative(benchmark::State& state) {
  const Circuit c = synthesize(make(Method::McuMod, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(lower_to_ngs(c));
}
BENCHMARK(BM_LowerToNative)->Arg(8)->Arg(16)->Arg(32);

void BM_Measure(benchmark::State& state) {
  const SynthConfig cfg = make(Method::McuZyz, static_cast<int>(state.range(0)));
  const ArchKind arch = state.range(1) ? ArchKind::LNN : ArchKind::FC;
  for (auto _ : state) benchmark::DoNotOptimize(measure(cfg, arch));
}
BENCHMARK(BM_Measure)->ArgsProduct({{8, 14}, {0, 1}});

}  // namespace

BENCHMARK_MAIN();
