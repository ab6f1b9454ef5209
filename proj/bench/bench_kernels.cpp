// risfb: limited-feedback simulator for RIS-assisted FDD downlinks
// Copyright (C) 2026 The risfb authors
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
// SPDX-License-Identifier: Apache-2.0
// ------------------------------------------------------------------------

// Serial reference kernels versus their OpenMP counterparts.
// Run with --benchmark_filter=... and OMP_NUM_THREADS to compare.

#include <benchmark/benchmark.h>

#include "risfb/montecarlo.hpp"

using namespace risfb;

namespace
{
    PointContext point(int b)
    {
        Scenario sc;
        sc.k_b_db = 10.0, sc.k_m_db = 0.0, sc.l_b = 3, sc.l_m = 10, sc.b = b;
        sc.geom.n_r_v = sc.geom.n_r_h = 10;
        return make_point(sc, {Strategy::perfect, Strategy::cascaded_adaptive, Strategy::cascaded_equal,
                               Strategy::naive_rvq},
                          1, 0);
    }

    ScenarioParams params()
    {
        ScenarioParams p;
        p.k_b = 10.0, p.k_m = 1.0, p.l_b = 3, p.l_m = 10, p.n_r = 100;
        return p;
    }

    void bm_trials_serial(benchmark::State &st)
    {
        const auto ctx = point(int(st.range(0)));
        for (auto _ : st)
            benchmark::DoNotOptimize(run_trials_serial(ctx, 256));
        st.SetItemsProcessed(st.iterations() * 256);
    }

    void bm_trials_parallel(benchmark::State &st)
    {
        const auto ctx = point(int(st.range(0)));
        for (auto _ : st)
            benchmark::DoNotOptimize(run_trials(ctx, 256));
        st.SetItemsProcessed(st.iterations() * 256);
    }

    void bm_brute_force_serial(benchmark::State &st)
    {
        const auto p = params();
        for (auto _ : st)
            benchmark::DoNotOptimize(brute_force_allocate_serial(int(st.range(0)), p));
    }

    void bm_brute_force_parallel(benchmark::State &st)
    {
        const auto p = params();
        for (auto _ : st)
            benchmark::DoNotOptimize(brute_force_allocate(int(st.range(0)), p));
    }

    void bm_allocate(benchmark::State &st)
    {
        const auto p = params();
        for (auto _ : st)
            benchmark::DoNotOptimize(allocate(int(st.range(0)), p));
    }
}

BENCHMARK(bm_trials_serial)->Arg(4)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_trials_parallel)->Arg(4)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_brute_force_serial)->Arg(12)->Arg(24)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_brute_force_parallel)->Arg(12)->Arg(24)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_allocate)->Arg(20)->Unit(benchmark::kNanosecond);

BENCHMARK_MAIN();
