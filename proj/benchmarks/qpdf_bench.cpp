// Copyright 2026 The polqpdf Authors
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

#include <complex>

#include "polqpdf/poincare.hpp"
#include "polqpdf/qpdf.hpp"

namespace {

using polqpdf::Complex;
using polqpdf::OrderParameter;
using polqpdf::PolarizationIndex;

const PolarizationIndex kQ = PolarizationIndex::from_angles(1.5707963267948966, 0.7853981633974483);

void BM_ClosedForm(benchmark::State& state) {
  const OrderParameter s(0.0);
  double acc = 0.0;
  double phase = 0.0;
  for (auto _ : state) {
    const Complex ax = std::polar(1.0, phase);
    acc += polqpdf::qpdf_coherent_closed(Complex(1.0, 0.0), Complex(0.0, 1.0), ax, -ax, s);
    phase += 1e-3;
  }
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_ClosedForm);

void BM_TraceProductState(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const auto st = polqpdf::two_mode_coherent_density(Complex(1.0, 0.5), Complex(-0.3, 0.8), dim);
  const OrderParameter s(0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(polqpdf::qpdf_trace(st, Complex(0.9, 0.4), Complex(-0.2, 0.7), s));
  }
  state.SetComplexityN(dim);
}
BENCHMARK(BM_TraceProductState)->RangeMultiplier(2)->Range(20, 120)->Complexity();

void BM_PhaseSweep(benchmark::State& state) {
  polqpdf::SweepOptions opts;
  opts.method = state.range(0) == 0 ? polqpdf::Method::closed_form : polqpdf::Method::trace_oracle;
  opts.threads = 1;
  const Complex beta = std::polar(1.0, 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        polqpdf::sweep_phase(beta, kQ, kQ, 1.0, OrderParameter(0.0), 128, opts));
  }
  state.SetLabel(state.range(0) == 0 ? "closed" : "trace");
}
BENCHMARK(BM_PhaseSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Normalization(benchmark::State& state) {
  const auto st = polqpdf::SingleModeState::coherent(Complex(0.6, 0.8), 40);
  const polqpdf::QuadratureSpec quad{6.0, static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(polqpdf::normalization_check(st, OrderParameter(0.0), quad));
  }
}
BENCHMARK(BM_Normalization)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace
