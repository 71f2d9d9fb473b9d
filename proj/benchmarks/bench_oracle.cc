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

#include "autexcl/oracle/curve.h"
#include "autexcl/oracle/enumerate.h"

namespace autexcl {
namespace {

void BM_CountHyperelliptic(benchmark::State& state) {
  auto curve = CurveModel::hyperelliptic(FiniteField::create(3, 1), {1, 0, 0, 0, 0, 1});
  EnumerateOptions opts;
  opts.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_points(curve, static_cast<int>(state.range(0)), opts));
  }
}
BENCHMARK(BM_CountHyperelliptic)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_CountChar2(benchmark::State& state) {
  auto curve = CurveModel::hyperelliptic(FiniteField::create(2, 1), {0, 1, 0, 0, 0, 1}, {1});
  EnumerateOptions opts;
  opts.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_points(curve, static_cast<int>(state.range(0)), opts));
  }
}
BENCHMARK(BM_CountChar2)->Arg(10)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_CountKleinQuartic(benchmark::State& state) {
  auto curve = CurveModel::plane_quartic(FiniteField::create(2, 3),
                                         {{3, 1, 0, 1}, {0, 3, 1, 1}, {1, 0, 3, 1}});
  EnumerateOptions opts;
  opts.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_points(curve, static_cast<int>(state.range(0)), opts));
  }
}
BENCHMARK(BM_CountKleinQuartic)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace autexcl
