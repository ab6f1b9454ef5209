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

#pragma once

#include "risfb/analysis.hpp"

namespace risfb
{
    // Continuous intermediates and rounding decisions of the adaptive split
    struct AllocationTrace
    {
        double b_l_dag = 0.0;  // LoS/NLoS split before rounding
        double b_bl_dag = 0.0; // b_l / 2
        double b_bn_dag = 0.0; // NLoS split before rounding
        double f_floor = 0.0, f_ceil = 0.0;   // LoS/NLoS objective at both roundings
        double p1_floor = 0.0, p1_ceil = 0.0; // NLoS product at both roundings
        double p3_floor = 0.0, p3_ceil = 0.0; // LoS cross term at both roundings
        bool los_disabled = false; // K = 0 or N_R = 1: no cascaded LoS worth aligning
        bool b_l_clamped = false;
        bool b_bn_clamped = false;
    };

    struct AllocationResult
    {
        BitAllocation alloc;
        AllocationTrace trace;
    };

    // b_l -> (b_bl, b_ml) around b_l / 2, ties go to the ceiling
    std::pair<int, int> split_los(int b_l, const ScenarioParams &p, AllocationTrace *trace = nullptr);

    // b_n -> (b_bn, b_mn)
    std::pair<int, int> split_nlos(int b_n, const ScenarioParams &p, AllocationTrace *trace = nullptr);

    // b -> (b_l, b_n)
    std::pair<int, int> split_total(int b, const ScenarioParams &p, AllocationTrace *trace = nullptr);

    // Continuous NLoS split before rounding
    double b_bn_continuous(int b_n, const ScenarioParams &p);

    // Continuous LoS/NLoS split before rounding; -inf when the LoS term vanishes
    double b_l_continuous(int b, const ScenarioParams &p);

    // Objective used to round the LoS/NLoS split
    double f_los_nlos(double b_l, int b, const ScenarioParams &p, const QConstants &q);

    AllocationResult allocate(int b, const ScenarioParams &p);

    constexpr int max_brute_force_bits = 24;

    // Exhaustive maximizer of p_lower over all 4-way splits; ties go to the
    // lexicographically smallest (b_bl, b_bn, b_ml, b_mn)
    BitAllocation brute_force_allocate_serial(int b, const ScenarioParams &p);
    BitAllocation brute_force_allocate(int b, const ScenarioParams &p); // OpenMP
}
