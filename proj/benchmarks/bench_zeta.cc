// Copyright 2026 The autexcl Authors
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

#include "autexcl/criterion.h"
#include "autexcl/ingest.h"
#include "autexcl/zeta.h"

namespace autexcl {
namespace {

const WeilPolynomial& x0plus_607() {
  static const WeilPolynomial poly = assemble(load_dataset(
      std::string(AUTEXCL_BENCH_FIXTURES_DIR) + "/hecke/x0plus_607.dat"));
  return poly;
}

void BM_PSequence(benchmark::State& state) {
  const auto arithmetic =
      state.range(1) ? Arithmetic::kExact : Arithmetic::kModular;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(p_sequence(x0plus_607(), PrimePower(2, 1), n, arithmetic));
  }
}
BENCHMARK(BM_PSequence)->Args({100, 0})->Args({300, 0})->Args({100, 1})->Args({300, 1});

void BM_NewtonPowerSums(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(newton_power_sums(x0plus_607(), static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_NewtonPowerSums)->Arg(50)->Arg(200);

void BM_Exclude(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(exclude(x0plus_607(), PrimePower(2, 1)));
  }
}
BENCHMARK(BM_Exclude);

}  // namespace
}  // namespace autexcl

BENCHMARK_MAIN();
