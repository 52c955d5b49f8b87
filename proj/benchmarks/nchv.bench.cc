// Copyright 2026 The nchv Authors
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

#include "nchv/assignments.h"
#include "nchv/constructions.h"
#include "nchv/optimizer.h"
#include "nchv/prepost.h"
#include "nchv/scenario_io.h"

namespace {

void BM_CabelloVerifyPipeline(benchmark::State &state) {
    for (auto _ : state) {
        auto s = nchv::cabello_scenario();
        auto report = nchv::validate(s);
        auto forced = nchv::forced_values(s);
        auto sat = nchv::enumerate_assignments(s, forced);
        benchmark::DoNotOptimize(report);
        benchmark::DoNotOptimize(sat);
    }
}
BENCHMARK(BM_CabelloVerifyPipeline);

// Single-qubit scenarios give 2 projectors per context, so n contexts is 2^(2n) assignments.
void BM_Enumerate(benchmark::State &state) {
    auto s = nchv::single_qubit_scenario(static_cast<int>(state.range(0)), 7);
    auto threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(nchv::enumerate_assignments(s, {}, threads));
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << s.projectors.size()));
}
BENCHMARK(BM_Enumerate)->Args({4, 1})->Args({8, 1})->Args({10, 1})->Args({10, 4})->Unit(benchmark::kMillisecond);

void BM_HardyObjective(benchmark::State &state) {
    double t = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(nchv::hardy_selection_probability(t, 1.1));
        t = t < 1.4 ? t + 1e-3 : 0.3;
    }
}
BENCHMARK(BM_HardyObjective);

void BM_MaximizeHardy(benchmark::State &state) {
    nchv::SearchOptions opts;
    opts.threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(nchv::maximize_hardy(opts));
    }
}
BENCHMARK(BM_MaximizeHardy)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_MaximizeCabelloFamily(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(nchv::maximize_cabello_family());
    }
}
BENCHMARK(BM_MaximizeCabelloFamily)->Unit(benchmark::kMillisecond);

void BM_ScenarioRoundTrip(benchmark::State &state) {
    auto s = nchv::hardy_scenario(0.9, 0.9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(nchv::save(nchv::load(nchv::save(s))));
    }
}
BENCHMARK(BM_ScenarioRoundTrip);

}  // namespace

BENCHMARK_MAIN();
