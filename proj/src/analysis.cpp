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

#include "risfb/analysis.hpp"

#include <algorithm>
#include <cmath>

void risfb::ScenarioParams::validate() const
{
    if (!(k_b >= 0.0) || !(k_m >= 0.0))
        throw ValidationError("Rician factor must be ≥ 0");
    if (l_b < 3 || l_m < 3)
        throw ValidationError("path count must be ≥ 3");
    if (n_b < 1 || n_r < 1)
        throw ValidationError("array sizes must be ≥ 1");
    if (!(noise_power > 0.0))
        throw ValidationError("noise power must be > 0");
    if (!(tx_power > 0.0))
        throw ValidationError("transmit power must be > 0");
}

double risfb::kappa(double k)
{
    return k * k / (k + 1.0) + 1.0;
}

double risfb::p_opt(const ScenarioParams &p)
{
    const double nb = p.n_b, nr = p.n_r;
    return (nb * nr * nr * p.k_b * p.k_m + nb * nr * (p.k_m + p.k_b + 1.0)) / ((1.0 + p.k_m) * (1.0 + p.k_b));
}

risfb::QConstants risfb::q_constants(const ScenarioParams &p)
{
    const double nb = p.n_b, nr = p.n_r, kb = p.k_b, km = p.k_m;
    const double lb1 = p.l_b - 1.0, lm1 = p.l_m - 1.0;
    const double lb2 = p.l_b - 2.0, lm2 = p.l_m - 2.0;
    const double s = lb2 + lm2;

    QConstants q;
    q.q1 = std::sqrt(nb * nr * nr / ((1.0 + km) * (1.0 + kb) * lm1 * lb1));
    const double inv_q2_sq = 1.0 / nr + kb * km * (nr - 1.0) / ((kb + 1.0) * (km + 1.0) * nr);
    q.q2 = 1.0 / std::sqrt(inv_q2_sq);
    q.q3 = kb * kb * km * km * (nr - 1.0) * (nr - 1.0) * lb1 * lm1 / (nr * nr * (kb + 1.0) * (km + 1.0));
    // Q3 / (N_R - 1) written out so that N_R = 1 gives 0 instead of 0/0
    q.q4 = kb * kb * km * km * (nr - 1.0) * lb1 * lm1 / (nr * nr * (kb + 1.0) * (km + 1.0));
    q.q5 = lb1 * lm1 / (nr * nr);
    q.kappa_b = kappa(kb);
    q.kappa_m = kappa(km);
    const double log_rho = std::log2(q.kappa_m * lm2 / (q.kappa_b * lb2));
    q.q6 = q.kappa_b * std::exp2(lb2 / s * log_rho) + q.kappa_m * std::exp2(-lm2 / s * log_rho);
    return q;
}

double risfb::los_phase_error_bound(int b_bl, int b_ml)
{
    return M_PI / std::exp2(double(b_bl)) + M_PI / std::exp2(double(b_ml));
}

double risfb::p_lower(const ScenarioParams &p, const QConstants &q, const BitAllocation &a)
{
    const double nlos = q.q5 * (q.kappa_b - std::exp2(-double(a.b_bn) / (p.l_b - 2.0))) *
                        (q.kappa_m - std::exp2(-double(a.b_mn) / (p.l_m - 2.0)));
    const double arg = std::clamp(los_phase_error_bound(a.b_bl, a.b_ml), 0.0, M_PI);
    return q.q1 * q.q1 * q.q2 * q.q2 * (nlos + q.q3 + 2.0 * q.q4 * std::cos(arg));
}

double risfb::p_lower(const ScenarioParams &p, const BitAllocation &alloc)
{
    return p_lower(p, q_constants(p), alloc);
}

double risfb::r_p_upper(const ScenarioParams &p)
{
    return std::log2(1.0 + p.tx_power * p_opt(p) / p.noise_power);
}

double risfb::delta_r_upper(const ScenarioParams &p, const BitAllocation &alloc)
{
    const double s2 = p.noise_power, e = p.tx_power;
    return std::log2((s2 + e * p_opt(p)) / (s2 + e * p_lower(p, alloc)));
}

risfb::BoundReport risfb::bound_report(const ScenarioParams &p, const BitAllocation &alloc)
{
    BoundReport r;
    r.p_opt = p_opt(p);
    r.q = q_constants(p);
    r.p_lower = p_lower(p, r.q, alloc);
    r.cos_arg_raw = los_phase_error_bound(alloc.b_bl, alloc.b_ml);
    r.r_p_upper = std::log2(1.0 + p.tx_power * r.p_opt / p.noise_power);
    r.r_q_upper_bound = std::log2(1.0 + p.tx_power * r.p_lower / p.noise_power);
    r.delta_r_upper = std::log2((p.noise_power + p.tx_power * r.p_opt) / (p.noise_power + p.tx_power * r.p_lower));
    return r;
}
