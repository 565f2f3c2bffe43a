// Copyright 2026 The rdlab Authors
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

#include "rdlab/dsl/complexity.h"
#include "rdlab/dsl/enumerator.h"
#include "rdlab/experiments.h"
#include "rdlab/random_instances.h"

namespace rdlab::dsl {
namespace {

LanguageConfig Budget(int b) {
  LanguageConfig cfg;
  cfg.budget = b;
  return cfg;
}

void BM_EnumerateRewards(benchmark::State& state) {
  const LanguageConfig cfg = Budget(static_cast<int>(state.range(0)));
  size_t n = 0;
  for (auto _ : state) {
    n = EnumeratePrograms(cfg, {2, 2}, Kind::kReward).programs.size();
    benchmark::DoNotOptimize(n);
  }
  state.counters["programs"] = static_cast<double>(n);
}
BENCHMARK(BM_EnumerateRewards)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_ComplexityIndex(benchmark::State& state) {
  const Environment env{TwoStateChain(2), Policy{{1, 0}}};
  for (auto _ : state) {
    ComplexityIndex index(env, Budget(static_cast<int>(state.range(0))));
    benchmark::DoNotOptimize(index.reward_classes().size());
  }
}
BENCHMARK(BM_ComplexityIndex)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_CompatiblePairs(benchmark::State& state) {
  const Environment env{TwoStateChain(2), Policy{{1, 0}}};
  const ComplexityIndex index(env, Budget(8));
  for (auto _ : state) benchmark::DoNotOptimize(CompatiblePairs(index));
}
BENCHMARK(BM_CompatiblePairs)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace rdlab::dsl
