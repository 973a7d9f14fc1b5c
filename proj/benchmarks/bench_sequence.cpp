// Copyright 2026 The exo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "exo/encoding.hpp"
#include "exo/gateset.hpp"
#include "exo/genetic.hpp"
#include "exo/metrics.hpp"
#include "exo/objective.hpp"
#include "exo/pulse.hpp"

namespace {

exo::Genome times_of(const exo::ExchangeSequence& s) {
  exo::Genome g;
  for (const auto& gate : s.gates) g.push_back(gate.t);
  return g;
}

exo::ExchangeSequence core19() {
  auto s = exo::builtin(exo::BuiltinId::Cnot31_3q);
  s.gates = {s.gates.begin() + 6, s.gates.begin() + 25};
  s.barriers.clear();
  return s;
}

void BM_ExchangeUnitary8(benchmark::State& state) {
  const exo::PulseGate g{4, 5, 1.2};
  for (auto _ : state) benchmark::DoNotOptimize(exo::exchange_unitary(g, 8));
}
BENCHMARK(BM_ExchangeUnitary8);

// Full 256x256 product of the 34-gate sequence.
void BM_EvaluateSequence34(benchmark::State& state) {
  const auto s = exo::builtin(exo::BuiltinId::Cnot34_4q);
  for (auto _ : state) benchmark::DoNotOptimize(exo::evaluate_sequence(s));
}
BENCHMARK(BM_EvaluateSequence34)->Unit(benchmark::kMillisecond);

// Sequence applied to the logical columns only.
void BM_ProjectSequence34(benchmark::State& state) {
  const auto s = exo::builtin(exo::BuiltinId::Cnot34_4q);
  const auto p = exo::projector_for(s);
  for (auto _ : state) benchmark::DoNotOptimize(exo::project_sequence(s, p));
}
BENCHMARK(BM_ProjectSequence34)->Unit(benchmark::kMicrosecond);

void BM_Makhlin(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto u = exo::random_unitary(4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(exo::makhlin(u));
}
BENCHMARK(BM_Makhlin);

void BM_Objective34(benchmark::State& state) {
  const auto s = exo::builtin(exo::BuiltinId::Cnot34_4q);
  const exo::SequenceObjective obj(exo::Layout::from_sequence(s), exo::InvariantTarget{});
  const auto x = times_of(s);
  for (auto _ : state) benchmark::DoNotOptimize(obj(x));
}
BENCHMARK(BM_Objective34)->Unit(benchmark::kMicrosecond);

void BM_Objective19(benchmark::State& state) {
  const auto s = core19();
  const exo::SequenceObjective obj(exo::Layout::from_sequence(s), exo::InvariantTarget{});
  const auto x = times_of(s);
  for (auto _ : state) benchmark::DoNotOptimize(obj(x));
}
BENCHMARK(BM_Objective19)->Unit(benchmark::kMicrosecond);

// One generation of one island on the 19-slot layout.
void BM_GaGeneration19(benchmark::State& state) {
  const exo::SequenceObjective obj(exo::Layout::from_sequence(core19()), exo::InvariantTarget{});
  const auto fn = obj.as_function();
  const exo::GAConfig cfg;
  exo::Rng rng(1);
  auto pop = exo::initial_population(19, cfg, fn, rng);
  for (auto _ : state) pop = exo::ga_generation(pop, cfg, fn, rng);
}
BENCHMARK(BM_GaGeneration19)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
