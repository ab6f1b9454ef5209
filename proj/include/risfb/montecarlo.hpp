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

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "risfb/bitalloc.hpp"
#include "risfb/ris_control.hpp"

namespace risfb
{
    enum class Strategy
    {
        perfect,
        cascaded_adaptive,
        cascaded_equal,
        naive_rvq
    };
    constexpr int n_strategies = 4;

    std::string to_string(Strategy s);
    Strategy parse_strategy(const std::string &name);   // throws ValidationError
    std::vector<Strategy> parse_strategy_list(const std::string &csv);

    enum class SweepVariable
    {
        k_b_db,
        k_m_db,
        l_m,
        b,
        n_r,
        e_db
    };

    std::string to_string(SweepVariable v);
    SweepVariable parse_sweep_variable(const std::string &name);

    // One operating point in user units (dB where the figures use dB)
    struct Scenario
    {
        SystemGeometry geom;
        double k_b_db = 0.0, k_m_db = 0.0;
        int l_b = 6, l_m = 6;
        double e_db = 0.0;
        double noise_db = 0.0;
        int b = 20;

        ScenarioParams params() const;
        void validate() const;
    };

    struct SweepValue
    {
        double value = 0.0;
        int n_v = 0, n_h = 0; // RIS grid, used by n_r sweeps only
        std::string text;
    };

    struct SweepSpec
    {
        std::string name = "sweep";
        Scenario base;
        SweepVariable variable = SweepVariable::b;
        std::vector<SweepValue> values;
        int trials = 2000;
        std::uint64_t seed = 1;
        std::vector<Strategy> strategies = {Strategy::perfect, Strategy::cascaded_adaptive,
                                            Strategy::cascaded_equal, Strategy::naive_rvq};

        void validate() const; // throws ValidationError
    };

    Scenario apply_sweep_value(const Scenario &base, SweepVariable var, const SweepValue &v);

    // (floor(b/4) each, remainder to b_bl, b_ml, b_bn, b_mn in that order)
    BitAllocation equal_split(int b);

    // Naive baseline bits reported as (0, floor(b/2), 0, ceil(b/2))
    BitAllocation naive_split(int b);

    // Everything fixed within one sweep point
    struct PointContext
    {
        Scenario scenario;
        ScenarioParams params;
        LosAngles los;
        ReflectionPhases phases;
        BitAllocation adaptive, equal;
        CascadedCodebook cb_adaptive, cb_equal;
        NaiveCodebook cb_naive;
        std::array<bool, n_strategies> enabled{};
        std::uint64_t root_seed = 0;
        std::uint64_t point_index = 0;
    };

    PointContext make_point(const Scenario &sc, const std::vector<Strategy> &strategies,
                            std::uint64_t root_seed, std::uint64_t point_index);

    std::uint64_t trial_seed(std::uint64_t root, std::uint64_t point, std::uint64_t trial);
    std::uint64_t codebook_seed(std::uint64_t root, std::uint64_t point);

    // Instantaneous rates per strategy (perfect is always evaluated; disabled ones are NaN)
    using TrialRates = std::array<double, n_strategies>;

    TrialRates run_trial(const PointContext &ctx, std::uint64_t seed);

    // Feedback word of the adaptive cascaded codebook for one trial
    std::string feedback_word(const PointContext &ctx, std::uint64_t seed);

    // Per-trial results in trial order
    std::vector<TrialRates> run_trials_serial(const PointContext &ctx, int trials);
    std::vector<TrialRates> run_trials(const PointContext &ctx, int trials, int threads = 0);

    // Fixed-order pairwise sum, independent of how the values were produced
    double pairwise_sum(const double *x, std::size_t n);

    struct MeanSe
    {
        double mean = 0.0, se = 0.0;
    };
    MeanSe mean_se(const std::vector<double> &x);

    struct ResultRow
    {
        std::string sweep_var;
        double sweep_value = 0.0;
        Strategy strategy = Strategy::perfect;
        int trials = 0;
        double rate_mean = 0.0, rate_se = 0.0;
        double rate_loss_mean = 0.0, rate_loss_se = 0.0; // paired (perfect - strategy)
        double r_p_upper = 0.0, delta_r_upper = 0.0;
        BitAllocation alloc;
        std::uint64_t seed = 0;
    };

    struct SweepResult
    {
        std::string name;
        std::vector<ResultRow> rows;
    };

    // Summarizes one point's trials into one row per requested strategy
    std::vector<ResultRow> summarize_point(const PointContext &ctx, const std::vector<TrialRates> &trials,
                                           SweepVariable var, double sweep_value);

    SweepResult run_sweep(const SweepSpec &spec, int threads = 0);

    extern const char *const csv_header;
    void write_csv(std::ostream &os, const SweepResult &r);
}
