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

#include "risfb/bitalloc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>
#include <vector>

namespace
{
    double clamped_cos(double x)
    {
        return std::cos(std::clamp(x, 0.0, M_PI));
    }

    double nlos_product(int b_bn, int b_mn, const risfb::ScenarioParams &p, const risfb::QConstants &q)
    {
        return (q.kappa_b - std::exp2(-double(b_bn) / (p.l_b - 2.0))) *
               (q.kappa_m - std::exp2(-double(b_mn) / (p.l_m - 2.0)));
    }

    struct Candidate
    {
        double value = -std::numeric_limits<double>::infinity();
        risfb::BitAllocation a;
        bool valid = false;
    };

    // Total order: larger value first, then lexicographically smaller split
    bool better(const Candidate &x, const Candidate &y)
    {
        if (!y.valid)
            return x.valid;
        if (!x.valid)
            return false;
        if (x.value != y.value)
            return x.value > y.value;
        const auto tx = std::tie(x.a.b_bl, x.a.b_bn, x.a.b_ml, x.a.b_mn);
        const auto ty = std::tie(y.a.b_bl, y.a.b_bn, y.a.b_ml, y.a.b_mn);
        return tx < ty;
    }

    Candidate scan_row(int b, int b_bl, const risfb::ScenarioParams &p, const risfb::QConstants &q)
    {
        Candidate best;
        for (int b_bn = 0; b_bn <= b - b_bl; ++b_bn)
            for (int b_ml = 0; b_ml <= b - b_bl - b_bn; ++b_ml)
            {
                Candidate c;
                c.a = {b_bl, b_bn, b_ml, b - b_bl - b_bn - b_ml};
                c.value = risfb::p_lower(p, q, c.a);
                c.valid = true;
                if (better(c, best))
                    best = c;
            }
        return best;
    }

    void check_budget(int b)
    {
        if (b < 0)
            throw risfb::IndexOutOfRange("bit budget must be ≥ 0");
        if (b > risfb::max_brute_force_bits)
            throw risfb::BudgetTooLarge("exhaustive allocation limited to b ≤ " +
                                        std::to_string(risfb::max_brute_force_bits));
    }
}

std::pair<int, int> risfb::split_los(int b_l, const ScenarioParams &p, AllocationTrace *trace)
{
    if (b_l < 0)
        throw IndexOutOfRange("b_l must be ≥ 0");
    const QConstants q = q_constants(p);
    const double dag = b_l / 2.0;
    const int lo = int(std::floor(dag)), hi = int(std::ceil(dag));
    const double p3_lo = 2.0 * q.q4 * clamped_cos(los_phase_error_bound(lo, b_l - lo));
    const double p3_hi = 2.0 * q.q4 * clamped_cos(los_phase_error_bound(hi, b_l - hi));
    const int b_bl = p3_hi >= p3_lo ? hi : lo;
    if (trace)
    {
        trace->b_bl_dag = dag;
        trace->p3_floor = p3_lo;
        trace->p3_ceil = p3_hi;
    }
    return {b_bl, b_l - b_bl};
}

double risfb::b_bn_continuous(int b_n, const ScenarioParams &p)
{
    const QConstants q = q_constants(p);
    const double lb2 = p.l_b - 2.0, lm2 = p.l_m - 2.0, s = lb2 + lm2;
    return b_n * lb2 / s + lm2 * lb2 / s * std::log2(q.kappa_m * lm2 / (q.kappa_b * lb2));
}

std::pair<int, int> risfb::split_nlos(int b_n, const ScenarioParams &p, AllocationTrace *trace)
{
    if (b_n < 0)
        throw IndexOutOfRange("b_n must be ≥ 0");
    const QConstants q = q_constants(p);
    const double dag = b_bn_continuous(b_n, p);
    const double fl = std::floor(dag), ce = std::ceil(dag);

    // Rounding is decided on the full product, then the result is clamped
    const double p1_lo = nlos_product(int(fl), b_n - int(fl), p, q);
    const double p1_hi = nlos_product(int(ce), b_n - int(ce), p, q);
    const int pick = p1_hi >= p1_lo ? int(ce) : int(fl);
    const int b_bn = std::clamp(pick, 0, b_n);
    if (trace)
    {
        trace->b_bn_dag = dag;
        trace->p1_floor = p1_lo;
        trace->p1_ceil = p1_hi;
        trace->b_bn_clamped = (b_bn != pick);
    }
    return {b_bn, b_n - b_bn};
}

double risfb::f_los_nlos(double b_l, int b, const ScenarioParams &p, const QConstants &q)
{
    const double s = p.l_b + p.l_m - 4.0;
    return q.q5 * (q.kappa_b * q.kappa_m - q.q6 * std::exp2(-(b - b_l) / s)) +
           2.0 * q.q4 * clamped_cos(2.0 * M_PI * std::exp2(-b_l / 2.0));
}

double risfb::b_l_continuous(int b, const ScenarioParams &p)
{
    const QConstants q = q_constants(p);
    const double s = p.l_b + p.l_m - 4.0;
    const double kb = p.k_b, km = p.k_m;
    const double arg = 4.0 * s * (p.n_r - 1.0) * kb * kb * km * km * M_PI * M_PI / ((kb + 1.0) * (km + 1.0) * q.q6);
    if (!(arg > 0.0))
        return -std::numeric_limits<double>::infinity();
    return b / (s + 1.0) + s / (s + 1.0) * std::log2(arg);
}

std::pair<int, int> risfb::split_total(int b, const ScenarioParams &p, AllocationTrace *trace)
{
    if (b < 0)
        throw IndexOutOfRange("bit budget must be ≥ 0");
    const QConstants q = q_constants(p);
    const double dag = b_l_continuous(b, p);

    AllocationTrace local;
    AllocationTrace &t = trace ? *trace : local;
    t.b_l_dag = dag;

    if (p.k_b == 0.0 || p.k_m == 0.0 || !std::isfinite(dag))
    {
        // no cascaded LoS power: every bit goes to the NLoS directions
        t.los_disabled = true;
        t.b_l_clamped = true;
        return {0, b};
    }

    // clamp the candidates first so out-of-range roundings never overflow an int
    const double fl = std::clamp(std::floor(dag), -1.0, double(b) + 1.0);
    const double ce = std::clamp(std::ceil(dag), -1.0, double(b) + 1.0);
    t.f_floor = f_los_nlos(fl, b, p, q);
    t.f_ceil = f_los_nlos(ce, b, p, q);
    const int pick = int(t.f_ceil >= t.f_floor ? ce : fl);
    const int b_l = std::clamp(pick, 0, b);
    t.b_l_clamped = (b_l != pick);
    return {b_l, b - b_l};
}

risfb::AllocationResult risfb::allocate(int b, const ScenarioParams &p)
{
    p.validate();
    AllocationResult r;
    const auto [b_l, b_n] = split_total(b, p, &r.trace);
    const auto [b_bl, b_ml] = split_los(b_l, p, &r.trace);
    const auto [b_bn, b_mn] = split_nlos(b_n, p, &r.trace);
    r.alloc = {b_bl, b_bn, b_ml, b_mn};
    return r;
}

risfb::BitAllocation risfb::brute_force_allocate_serial(int b, const ScenarioParams &p)
{
    check_budget(b);
    p.validate();
    const QConstants q = q_constants(p);
    Candidate best;
    for (int b_bl = 0; b_bl <= b; ++b_bl)
    {
        const Candidate c = scan_row(b, b_bl, p, q);
        if (better(c, best))
            best = c;
    }
    return best.a;
}

risfb::BitAllocation risfb::brute_force_allocate(int b, const ScenarioParams &p)
{
    check_budget(b);
    p.validate();
    const QConstants q = q_constants(p);

    // one slot per outer index, reduced in fixed order afterwards
    std::vector<Candidate> rows(b + 1);
#pragma omp parallel for schedule(dynamic)
    for (int b_bl = 0; b_bl <= b; ++b_bl)
        rows[b_bl] = scan_row(b, b_bl, p, q);

    Candidate best;
    for (const auto &c : rows)
        if (better(c, best))
            best = c;
    return best.a;
}
