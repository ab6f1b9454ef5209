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

#include "risfb/codebook.hpp"

namespace risfb
{
    // Everything the closed-form bounds need. Rician factors and powers are linear.
    struct ScenarioParams
    {
        double k_b = 1.0, k_m = 1.0;
        int l_b = 6, l_m = 6;
        int n_b = 8, n_r = 15;
        double noise_power = 1.0; // sigma^2
        double tx_power = 1.0;    // E

        void validate() const;
    };

    struct QConstants
    {
        double q1 = 0.0, q2 = 0.0, q3 = 0.0, q4 = 0.0, q5 = 0.0, q6 = 0.0;
        double kappa_b = 0.0, kappa_m = 0.0;
    };

    struct BoundReport
    {
        double p_opt = 0.0;
        QConstants q;
        double p_lower = 0.0;
        double cos_arg_raw = 0.0; // pi/2^b_bl + pi/2^b_ml before clamping
        double r_p_upper = 0.0;
        double r_q_upper_bound = 0.0; // log2(1 + E p_lower / sigma^2)
        double delta_r_upper = 0.0;
    };

    // K^2/(K+1) + 1
    double kappa(double k);

    // Expected received power with perfect CSI and aligned RIS phases
    double p_opt(const ScenarioParams &p);

    // The constants depend only on the scenario, not on the bit split
    QConstants q_constants(const ScenarioParams &p);

    // pi/2^b_bl + pi/2^b_ml, the worst-case cascaded LoS phase error
    double los_phase_error_bound(int b_bl, int b_ml);

    // Lower bound on the expected received power under quantized CSI.
    // The cosine argument is clamped to [0, pi].
    double p_lower(const ScenarioParams &p, const BitAllocation &alloc);
    double p_lower(const ScenarioParams &p, const QConstants &q, const BitAllocation &alloc);

    double r_p_upper(const ScenarioParams &p);
    double delta_r_upper(const ScenarioParams &p, const BitAllocation &alloc);

    BoundReport bound_report(const ScenarioParams &p, const BitAllocation &alloc);
}
