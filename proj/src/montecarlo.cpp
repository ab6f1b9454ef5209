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

#include "risfb/montecarlo.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <omp.h>
#include <sstream>

namespace
{
    const char *const strategy_names[] = {"perfect", "cascaded_adaptive", "cascaded_equal", "naive_rvq"};
    const char *const sweep_names[] = {"k_b_db", "k_m_db", "l_m", "b", "n_r", "e_db"};

    std::string fmt(double x)
    {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.10g", x);
        return buf;
    }

    double quantized_gain(const arma::cx_vec &h_eff, const arma::cx_mat &A, const arma::cx_vec &w)
    {
        const arma::cx_vec f = A * w;
        const double n = arma::norm(f);
        if (n == 0.0)
            return 0.0;
        return std::norm(arma::cdot(h_eff, f)) / (n * n);
    }
}

std::string risfb::to_string(Strategy s)
{
    return strategy_names[int(s)];
}

risfb::Strategy risfb::parse_strategy(const std::string &name)
{
    for (int i = 0; i < n_strategies; ++i)
        if (name == strategy_names[i])
            return Strategy(i);
    throw ValidationError("unknown strategy '" + name + "'");
}

std::vector<risfb::Strategy> risfb::parse_strategy_list(const std::string &csv)
{
    std::vector<Strategy> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        const auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
        if (b == std::string::npos)
            continue;
        const Strategy s = parse_strategy(item.substr(b, e - b + 1));
        bool dup = false;
        for (auto x : out)
            dup = dup || x == s;
        if (!dup)
            out.push_back(s);
    }
    if (out.empty())
        throw ValidationError("strategy list is empty");
    return out;
}

std::string risfb::to_string(SweepVariable v)
{
    return sweep_names[int(v)];
}

risfb::SweepVariable risfb::parse_sweep_variable(const std::string &name)
{
    for (int i = 0; i < 6; ++i)
        if (name == sweep_names[i])
            return SweepVariable(i);
    throw ValidationError("unknown sweep variable '" + name + "'");
}

risfb::ScenarioParams risfb::Scenario::params() const
{
    ScenarioParams p;
    p.k_b = std::isinf(k_b_db) && k_b_db < 0 ? 0.0 : db_to_linear(k_b_db);
    p.k_m = std::isinf(k_m_db) && k_m_db < 0 ? 0.0 : db_to_linear(k_m_db);
    p.l_b = l_b;
    p.l_m = l_m;
    p.n_b = geom.n_b();
    p.n_r = geom.n_r();
    p.noise_power = db_to_linear(noise_db);
    p.tx_power = db_to_linear(e_db);
    return p;
}

void risfb::Scenario::validate() const
{
    geom.validate();
    if (l_b < 3 || l_m < 3)
        throw ValidationError("path count must be ≥ 3");
    if (b < 0)
        throw ValidationError("feedback bits must be ≥ 0");
    if (b > 40)
        throw ValidationError("feedback bits must be ≤ 40");
    if (std::isnan(k_b_db) || std::isnan(k_m_db) || !std::isfinite(e_db) || !std::isfinite(noise_db))
        throw ValidationError("power and Rician values must be numbers");
    if (k_b_db == std::numeric_limits<double>::infinity() || k_m_db == std::numeric_limits<double>::infinity())
        throw ValidationError("Rician factor must be finite");
    params().validate();
}

void risfb::SweepSpec::validate() const
{
    if (trials < 1)
        throw ValidationError("trials must be ≥ 1");
    if (values.empty())
        throw ValidationError("sweep '" + name + "' has no values");
    if (strategies.empty())
        throw ValidationError("strategy list is empty");
    for (const auto &v : values)
        apply_sweep_value(base, variable, v).validate();
}

risfb::Scenario risfb::apply_sweep_value(const Scenario &base, SweepVariable var, const SweepValue &v)
{
    Scenario s = base;
    switch (var)
    {
    case SweepVariable::k_b_db:
        s.k_b_db = v.value;
        break;
    case SweepVariable::k_m_db:
        s.k_m_db = v.value;
        break;
    case SweepVariable::l_m:
        s.l_m = int(v.value);
        break;
    case SweepVariable::b:
        s.b = int(v.value);
        break;
    case SweepVariable::n_r:
        s.geom.n_r_v = v.n_v;
        s.geom.n_r_h = v.n_h;
        break;
    case SweepVariable::e_db:
        s.e_db = v.value;
        break;
    }
    return s;
}

risfb::BitAllocation risfb::equal_split(int b)
{
    if (b < 0)
        throw IndexOutOfRange("bit budget must be ≥ 0");
    BitAllocation a{b / 4, b / 4, b / 4, b / 4};
    int rem = b % 4;
    int *order[] = {&a.b_bl, &a.b_ml, &a.b_bn, &a.b_mn};
    for (int k = 0; k < rem; ++k)
        ++*order[k];
    return a;
}

risfb::BitAllocation risfb::naive_split(int b)
{
    return {0, b / 2, 0, b - b / 2};
}

std::uint64_t risfb::trial_seed(std::uint64_t root, std::uint64_t point, std::uint64_t trial)
{
    return derive_seed(root, point, trial, 1);
}

std::uint64_t risfb::codebook_seed(std::uint64_t root, std::uint64_t point)
{
    return derive_seed(root, point, 0, 2);
}

risfb::PointContext risfb::make_point(const Scenario &sc, const std::vector<Strategy> &strategies,
                                      std::uint64_t root_seed, std::uint64_t point_index)
{
    sc.validate();
    PointContext ctx;
    ctx.scenario = sc;
    ctx.params = sc.params();
    ctx.los = los_angles_from_geometry(sc.geom);
    ctx.phases = optimal_phases(ctx.los, sc.geom);
    ctx.root_seed = root_seed;
    ctx.point_index = point_index;
    for (auto s : strategies)
        ctx.enabled[int(s)] = true;
    ctx.enabled[int(Strategy::perfect)] = true;

    ctx.adaptive = allocate(sc.b, ctx.params).alloc;
    ctx.equal = equal_split(sc.b);
    const std::uint64_t cs = codebook_seed(root_seed, point_index);
    const auto &p = ctx.params;
    if (ctx.enabled[int(Strategy::cascaded_adaptive)])
        ctx.cb_adaptive = make_codebook(ctx.adaptive, p.k_b, p.k_m, p.l_b, p.l_m, cs);
    if (ctx.enabled[int(Strategy::cascaded_equal)])
        ctx.cb_equal = make_codebook(ctx.equal, p.k_b, p.k_m, p.l_b, p.l_m, cs);
    if (ctx.enabled[int(Strategy::naive_rvq)])
        ctx.cb_naive = make_naive_codebook(sc.b, p.l_b, p.l_m, cs);
    return ctx;
}

risfb::TrialRates risfb::run_trial(const PointContext &ctx, std::uint64_t seed)
{
    const auto &p = ctx.params;
    const auto &geom = ctx.scenario.geom;
    RandomStream rng(seed);
    const ChannelEnvironment env = sample_environment(p.k_b, p.k_m, p.l_b, p.l_m, ctx.los, rng);

    const arma::cx_vec h_eff = effective_channel(build_H(env, geom), build_h(env, geom), ctx.phases.psi);
    const double snr_scale = p.tx_power / p.noise_power;

    TrialRates out;
    out.fill(std::numeric_limits<double>::quiet_NaN());
    out[int(Strategy::perfect)] = std::log2(1.0 + snr_scale * std::pow(arma::norm(h_eff), 2));

    const bool any_q = ctx.enabled[1] || ctx.enabled[2] || ctx.enabled[3];
    if (!any_q)
        return out;
    const arma::cx_mat A = build_A(env, geom, ctx.phases.psi);

    if (ctx.enabled[int(Strategy::cascaded_adaptive)])
    {
        const auto q = quantize_channel(env, ctx.cb_adaptive);
        out[int(Strategy::cascaded_adaptive)] = std::log2(1.0 + snr_scale * quantized_gain(h_eff, A, q.w));
    }
    if (ctx.enabled[int(Strategy::cascaded_equal)])
    {
        const auto q = quantize_channel(env, ctx.cb_equal);
        out[int(Strategy::cascaded_equal)] = std::log2(1.0 + snr_scale * quantized_gain(h_eff, A, q.w));
    }
    if (ctx.enabled[int(Strategy::naive_rvq)])
    {
        const auto q = quantize_naive(env, ctx.cb_naive);
        out[int(Strategy::naive_rvq)] = std::log2(1.0 + snr_scale * quantized_gain(h_eff, A, q.w));
    }
    return out;
}

std::string risfb::feedback_word(const PointContext &ctx, std::uint64_t seed)
{
    const auto &p = ctx.params;
    RandomStream rng(seed);
    const ChannelEnvironment env = sample_environment(p.k_b, p.k_m, p.l_b, p.l_m, ctx.los, rng);
    if (ctx.cb_adaptive.bs.rvq.n_elem == 0)
        throw ValidationError("adaptive strategy is not enabled for this point");
    return encode_feedback(quantize_channel(env, ctx.cb_adaptive), ctx.adaptive);
}

std::vector<risfb::TrialRates> risfb::run_trials_serial(const PointContext &ctx, int trials)
{
    std::vector<TrialRates> out(trials);
    for (int t = 0; t < trials; ++t)
        out[t] = run_trial(ctx, trial_seed(ctx.root_seed, ctx.point_index, t));
    return out;
}

std::vector<risfb::TrialRates> risfb::run_trials(const PointContext &ctx, int trials, int threads)
{
    std::vector<TrialRates> out(trials);
    const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(nt)
    for (int t = 0; t < trials; ++t)
        out[t] = run_trial(ctx, trial_seed(ctx.root_seed, ctx.point_index, t));
    return out;
}

double risfb::pairwise_sum(const double *x, std::size_t n)
{
    if (n <= 8)
    {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            s += x[i];
        return s;
    }
    const std::size_t h = n / 2;
    return pairwise_sum(x, h) + pairwise_sum(x + h, n - h);
}

risfb::MeanSe risfb::mean_se(const std::vector<double> &x)
{
    MeanSe r;
    const std::size_t n = x.size();
    if (n == 0)
        return r;
    r.mean = pairwise_sum(x.data(), n) / double(n);
    if (n < 2)
        return r;
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i)
        d[i] = (x[i] - r.mean) * (x[i] - r.mean);
    r.se = std::sqrt(pairwise_sum(d.data(), n) / double(n - 1) / double(n));
    return r;
}

std::vector<risfb::ResultRow> risfb::summarize_point(const PointContext &ctx, const std::vector<TrialRates> &trials,
                                                     SweepVariable var, double sweep_value)
{
    const int n = int(trials.size());
    std::vector<double> perf(n);
    for (int t = 0; t < n; ++t)
        perf[t] = trials[t][0];
    const double rpu = r_p_upper(ctx.params);

    std::vector<ResultRow> rows;
    for (int s = 0; s < n_strategies; ++s)
    {
        if (!ctx.enabled[s])
            continue;
        std::vector<double> rate(n), loss(n);
        for (int t = 0; t < n; ++t)
        {
            rate[t] = trials[t][s];
            loss[t] = perf[t] - trials[t][s];
        }
        ResultRow r;
        r.sweep_var = to_string(var);
        r.sweep_value = sweep_value;
        r.strategy = Strategy(s);
        r.trials = n;
        const MeanSe m = mean_se(rate), l = mean_se(loss);
        r.rate_mean = m.mean;
        r.rate_se = m.se;
        r.rate_loss_mean = l.mean;
        r.rate_loss_se = l.se;
        r.r_p_upper = rpu;
        r.seed = ctx.root_seed;
        switch (Strategy(s))
        {
        case Strategy::perfect:
            r.delta_r_upper = 0.0;
            break;
        case Strategy::cascaded_adaptive:
            r.alloc = ctx.adaptive;
            r.delta_r_upper = delta_r_upper(ctx.params, ctx.adaptive);
            break;
        case Strategy::cascaded_equal:
            r.alloc = ctx.equal;
            r.delta_r_upper = delta_r_upper(ctx.params, ctx.equal);
            break;
        case Strategy::naive_rvq:
            r.alloc = naive_split(ctx.scenario.b);
            r.delta_r_upper = std::numeric_limits<double>::quiet_NaN();
            break;
        }
        rows.push_back(r);
    }
    return rows;
}

risfb::SweepResult risfb::run_sweep(const SweepSpec &spec, int threads)
{
    spec.validate();
    SweepResult res;
    res.name = spec.name;
    for (std::size_t k = 0; k < spec.values.size(); ++k)
    {
        const Scenario sc = apply_sweep_value(spec.base, spec.variable, spec.values[k]);
        const PointContext ctx = make_point(sc, spec.strategies, spec.seed, k);
        const auto trials = run_trials(ctx, spec.trials, threads);
        const double xv = spec.variable == SweepVariable::n_r ? double(sc.geom.n_r()) : spec.values[k].value;
        std::vector<ResultRow> rows = summarize_point(ctx, trials, spec.variable, xv);
        // keep only the strategies the user asked for, in canonical order
        for (auto &r : rows)
        {
            bool want = false;
            for (auto s : spec.strategies)
                want = want || s == r.strategy;
            if (want)
                res.rows.push_back(r);
        }
    }
    return res;
}

const char *const risfb::csv_header =
    "sweep_var,sweep_value,strategy,trials,rate_mean,rate_se,rate_loss_mean,r_p_upper,delta_r_upper,"
    "b_bl,b_bn,b_ml,b_mn,seed";

void risfb::write_csv(std::ostream &os, const SweepResult &r)
{
    os << csv_header << '\n';
    for (const auto &row : r.rows)
    {
        os << row.sweep_var << ',' << fmt(row.sweep_value) << ',' << to_string(row.strategy) << ','
           << row.trials << ',' << fmt(row.rate_mean) << ',' << fmt(row.rate_se) << ','
           << fmt(row.rate_loss_mean) << ',' << fmt(row.r_p_upper) << ',' << fmt(row.delta_r_upper) << ','
           << row.alloc.b_bl << ',' << row.alloc.b_bn << ',' << row.alloc.b_ml << ',' << row.alloc.b_mn << ','
           << row.seed << '\n';
    }
}
