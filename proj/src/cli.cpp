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

#include "risfb/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "risfb/config.hpp"
#include "risfb/verify.hpp"

namespace
{
    std::string fmt(double x, const char *f = "%.6g")
    {
        char buf[64];
        std::snprintf(buf, sizeof buf, f, x);
        return buf;
    }

    struct RunOptions
    {
        std::string preset, config, out_dir = "out", strategies;
        std::optional<std::uint64_t> seed;
        std::optional<int> trials;
        int threads = 0;
        int feedback_log = 0;
        bool quiet = false;
    };

    struct LinkOptions
    {
        int b = 20;
        double kb_db = 0.0, km_db = 0.0, e_db = 0.0, noise_db = 0.0;
        int lb = 6, lm = 6, nr = 15, nb = 8;
        bool trace = false;
        std::vector<int> alloc;

        risfb::ScenarioParams params() const
        {
            risfb::ScenarioParams p;
            p.k_b = kb_db == -std::numeric_limits<double>::infinity() ? 0.0 : risfb::db_to_linear(kb_db);
            p.k_m = km_db == -std::numeric_limits<double>::infinity() ? 0.0 : risfb::db_to_linear(km_db);
            p.l_b = lb;
            p.l_m = lm;
            p.n_r = nr;
            p.n_b = nb;
            p.tx_power = risfb::db_to_linear(e_db);
            p.noise_power = risfb::db_to_linear(noise_db);
            return p;
        }
    };

    void add_link_options(CLI::App *sub, LinkOptions &o)
    {
        sub->add_option("--b", o.b, "total feedback bits")->check(CLI::NonNegativeNumber);
        sub->add_option("--kb-db", o.kb_db, "BS-RIS Rician factor in dB");
        sub->add_option("--km-db", o.km_db, "RIS-MS Rician factor in dB");
        sub->add_option("--lb", o.lb, "BS-RIS path count (LoS included)");
        sub->add_option("--lm", o.lm, "RIS-MS path count (LoS included)");
        sub->add_option("--nr", o.nr, "number of RIS elements")->check(CLI::PositiveNumber);
        sub->add_option("--nb", o.nb, "number of BS antennas")->check(CLI::PositiveNumber);
    }

    std::vector<risfb::SweepSpec> load_specs(const RunOptions &o)
    {
        std::vector<risfb::SweepSpec> specs = o.preset.empty() ? risfb::parse_config_file(o.config)
                                                               : risfb::parse_config(risfb::preset_text(o.preset), o.preset);
        for (auto &s : specs)
        {
            if (o.seed)
                s.seed = *o.seed;
            if (o.trials)
                s.trials = *o.trials;
            if (!o.strategies.empty())
                s.strategies = risfb::parse_strategy_list(o.strategies);
            s.validate();
        }
        return specs;
    }

    int cmd_run(const RunOptions &o, std::ostream &out)
    {
        const auto specs = load_specs(o);
        std::filesystem::create_directories(o.out_dir);
        for (const auto &s : specs)
        {
            const auto res = risfb::run_sweep(s, o.threads);
            const std::filesystem::path path = std::filesystem::path(o.out_dir) / (s.name + ".csv");
            std::ofstream f(path);
            if (!f)
                throw risfb::Error("cannot write '" + path.string() + "'");
            risfb::write_csv(f, res);

            if (o.feedback_log > 0)
            {
                const auto log_path = std::filesystem::path(o.out_dir) / (s.name + "_feedback.txt");
                std::ofstream fl(log_path);
                fl << "# point,trial,bits (adaptive cascaded codebook, i-1 big-endian)\n";
                for (std::size_t k = 0; k < s.values.size(); ++k)
                {
                    const auto sc = risfb::apply_sweep_value(s.base, s.variable, s.values[k]);
                    const auto ctx = risfb::make_point(sc, {risfb::Strategy::cascaded_adaptive}, s.seed, k);
                    const int n = std::min(o.feedback_log, s.trials);
                    for (int t = 0; t < n; ++t)
                        fl << k << ',' << t << ','
                           << risfb::feedback_word(ctx, risfb::trial_seed(s.seed, k, t)) << '\n';
                }
            }

            if (!o.quiet)
            {
                out << "sweep " << s.name << " (" << risfb::to_string(s.variable) << ", " << s.trials
                    << " trials) -> " << path.string() << '\n';
                out << "  value      strategy            rate     +-se      loss     dR_up   alloc\n";
                for (const auto &r : res.rows)
                {
                    char line[200];
                    std::snprintf(line, sizeof line, "  %-10s %-18s %8.4f %8.4f %8.4f %8s   %s\n",
                                  fmt(r.sweep_value).c_str(), risfb::to_string(r.strategy).c_str(), r.rate_mean,
                                  r.rate_se, r.rate_loss_mean, fmt(r.delta_r_upper, "%.4f").c_str(),
                                  risfb::to_string(r.alloc).c_str());
                    out << line;
                }
            }
        }
        return 0;
    }

    int cmd_allocate(const LinkOptions &o, std::ostream &out)
    {
        const auto p = o.params();
        const auto r = risfb::allocate(o.b, p);
        out << risfb::to_string(r.alloc) << '\n';
        if (o.trace)
        {
            const auto &t = r.trace;
            out << "b_l_dag " << fmt(t.b_l_dag, "%.6f") << (t.los_disabled ? " (LoS disabled)" : "") << '\n'
                << "f(floor) " << fmt(t.f_floor, "%.9g") << "  f(ceil) " << fmt(t.f_ceil, "%.9g") << '\n'
                << "b_bl_dag " << fmt(t.b_bl_dag, "%.6f") << '\n'
                << "b_bn_dag " << fmt(t.b_bn_dag, "%.6f") << '\n'
                << "p1(floor) " << fmt(t.p1_floor, "%.9g") << "  p1(ceil) " << fmt(t.p1_ceil, "%.9g") << '\n'
                << "p_lower " << fmt(risfb::p_lower(p, r.alloc), "%.9g") << '\n';
        }
        return 0;
    }

    int cmd_bounds(const LinkOptions &o, std::ostream &out)
    {
        const auto p = o.params();
        p.validate();
        risfb::BitAllocation a;
        if (o.alloc.empty())
            a = risfb::allocate(o.b, p).alloc;
        else
            a = {o.alloc[0], o.alloc[1], o.alloc[2], o.alloc[3]};
        const auto r = risfb::bound_report(p, a);
        out << "allocation     " << risfb::to_string(a) << '\n'
            << "p_opt          " << fmt(r.p_opt, "%.9g") << '\n'
            << "q1..q6         " << fmt(r.q.q1, "%.9g") << ' ' << fmt(r.q.q2, "%.9g") << ' ' << fmt(r.q.q3, "%.9g")
            << ' ' << fmt(r.q.q4, "%.9g") << ' ' << fmt(r.q.q5, "%.9g") << ' ' << fmt(r.q.q6, "%.9g") << '\n'
            << "kappa_b,m      " << fmt(r.q.kappa_b, "%.9g") << ' ' << fmt(r.q.kappa_m, "%.9g") << '\n'
            << "p_lower        " << fmt(r.p_lower, "%.9g") << '\n'
            << "cos arg (raw)  " << fmt(r.cos_arg_raw, "%.9g") << '\n'
            << "r_p_upper      " << fmt(r.r_p_upper, "%.9g") << '\n'
            << "r_q_lower      " << fmt(r.r_q_upper_bound, "%.9g") << '\n'
            << "delta_r_upper  " << fmt(r.delta_r_upper, "%.9g") << '\n';
        return 0;
    }
}

int risfb::run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Limited-feedback simulator for RIS-assisted FDD downlinks", "ris_sim"};
    app.require_subcommand(1);

    RunOptions ro;
    auto *run = app.add_subcommand("run", "run parameter sweeps and write one CSV per sweep");
    auto *o_preset = run->add_option("--preset", ro.preset, "built-in scenario (fig2 .. fig8)");
    auto *o_config = run->add_option("--config", ro.config, "scenario file")->check(CLI::ExistingFile);
    o_preset->excludes(o_config);
    o_config->excludes(o_preset);
    run->add_option("--out", ro.out_dir, "output directory");
    run->add_option("--seed", ro.seed, "root seed");
    run->add_option("--trials", ro.trials, "trials per sweep point")->check(CLI::PositiveNumber);
    run->add_option("--strategies", ro.strategies, "comma-separated strategy list");
    run->add_option("--threads", ro.threads, "worker threads (0: OpenMP default)")
        ->envname("RIS_SIM_THREADS")
        ->check(CLI::NonNegativeNumber);
    run->add_option("--feedback-log", ro.feedback_log, "log the first N feedback words per point")
        ->check(CLI::NonNegativeNumber);
    run->add_flag("--quiet", ro.quiet, "no summary table");

    LinkOptions ao;
    auto *alloc = app.add_subcommand("allocate", "print the adaptive bit split (b_bl,b_bn,b_ml,b_mn)");
    add_link_options(alloc, ao);
    alloc->add_flag("--trace", ao.trace, "also print the rounding trace");

    LinkOptions bo;
    auto *bounds = app.add_subcommand("bounds", "print the closed-form bound report");
    add_link_options(bounds, bo);
    bounds->add_option("--e-db", bo.e_db, "transmit power in dB");
    bounds->add_option("--noise-db", bo.noise_db, "noise power in dB");
    bounds->add_option("--alloc", bo.alloc, "explicit split b_bl b_bn b_ml b_mn")->expected(4);

    std::uint64_t vseed = 1;
    auto *verify = app.add_subcommand("verify", "run the invariant suite");
    verify->add_option("--seed", vseed, "root seed");

    std::string show;
    auto *presets = app.add_subcommand("presets", "list built-in scenarios");
    presets->add_option("--show", show, "print one preset file");

    try
    {
        app.parse(argc, argv);
        if (*run && ro.preset.empty() && ro.config.empty())
            throw CLI::RequiredError("one of --preset or --config");
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try
    {
        if (*run)
            return cmd_run(ro, out);
        if (*alloc)
            return cmd_allocate(ao, out);
        if (*bounds)
            return cmd_bounds(bo, out);
        if (*verify)
        {
            bool ok = true;
            for (const auto &c : run_verify_suite(vseed))
            {
                out << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
                ok = ok && c.pass;
            }
            return ok ? 0 : 1;
        }
        if (*presets)
        {
            if (!show.empty())
                out << preset_text(show);
            else
                for (const auto &n : preset_names())
                    out << n << '\n';
            return 0;
        }
    }
    catch (const std::exception &e)
    {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
