// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------


#include <benchmark/benchmark.h>

#include "qgabor/constructors.hpp"
#include "qgabor/frame_analysis.hpp"
#include "qgabor/gabor_ops.hpp"
#include "qgabor/matrix_fn.hpp"
#include "qgabor/oracle.hpp"
#include "qgabor/sampling.hpp"

namespace {

using namespace qgabor;

WindowFamily family(int M, int side) {
  Rng rng(1);
  return random_real_family(rng, GaborParams(2, M, M), {{0, 0}, {side, side}});
}

void BM_FrameFunctionalClosedForm(benchmark::State& state) {
  const WindowFamily w = family(static_cast<int>(state.range(0)), 6);
  Rng rng(2);
  const FiniteSignal h = random_signal(rng, IndexBox::square(8), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(frame_functional(w, h));
}
BENCHMARK(BM_FrameFunctionalClosedForm)->Arg(2)->Arg(4)->Arg(8);

void BM_FrameFunctionalOracle(benchmark::State& state) {
  const WindowFamily w = family(static_cast<int>(state.range(0)), 6);
  Rng rng(2);
  const FiniteSignal h = random_signal(rng, IndexBox::square(8), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::frame_functional(w, h));
}
BENCHMARK(BM_FrameFunctionalOracle)->Arg(2)->Arg(4)->Arg(8);

void BM_CorrelationRow(benchmark::State& state) {
  const WindowFamily w = family(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(correlation_row(w, w, {1, 2}));
}
BENCHMARK(BM_CorrelationRow)->Arg(4)->Arg(16)->Arg(64);

void BM_OperatorInequality(benchmark::State& state) {
  const WindowFamily w = family(3, 5);
  const int radius = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(operator_inequality_bounds(w, radius, 1e-8, radius));
}
BENCHMARK(BM_OperatorInequality)->Arg(1)->Arg(2)->Arg(4);

void BM_OnbCheck(benchmark::State& state) {
  const WindowFamily w = build_onb(5, 10);
  for (auto _ : state) benchmark::DoNotOptimize(onb_check(w));
}
BENCHMARK(BM_OnbCheck);

}  // namespace

BENCHMARK_MAIN();
