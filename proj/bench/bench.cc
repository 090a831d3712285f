// Copyright 2026 The sdc Authors
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

// Serial reference vs OpenMP kernels. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <numbers>

#include "sdc/measures.h"
#include "sdc/sweep.h"

namespace {

const sdc::DensityMatrix &sample_state() {
    static const sdc::DensityMatrix rho =
        sdc::protocol_state({sdc::ModeSplit(0.4, 0.55), sdc::BellIndex(0, 1), sdc::Message(1, 0)});
    return rho;
}

void BM_ClassicalCorrelation(benchmark::State &state) {
    const auto exec = state.range(0) ? sdc::Execution::kParallel : sdc::Execution::kSerial;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sdc::classical_correlation(sample_state(), exec));
    }
    state.SetLabel(state.range(0) ? "openmp" : "serial");
}
BENCHMARK(BM_ClassicalCorrelation)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

sdc::SweepConfig sweep_config(int grid, bool discord) {
    sdc::SweepConfig cfg;
    cfg.r_spec = {0.0, std::numbers::pi / 4, grid};
    cfg.ql_spec = {0.0, 1.0, grid};
    cfg.include_discord = discord;
    return cfg;
}

void BM_SweepSerial(benchmark::State &state) {
    const auto cfg = sweep_config(static_cast<int>(state.range(0)), state.range(1) != 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sdc::run_sweep_serial(cfg));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_SweepSerial)->Args({21, 0})->Args({21, 1})->Unit(benchmark::kMillisecond);

void BM_SweepOpenMP(benchmark::State &state) {
    const auto cfg = sweep_config(static_cast<int>(state.range(0)), state.range(1) != 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sdc::run_sweep(cfg));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_SweepOpenMP)->Args({21, 0})->Args({21, 1})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
