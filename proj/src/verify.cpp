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

#include "risfb/verify.hpp"

#include <cmath>
#include <sstream>

#include "risfb/montecarlo.hpp"

namespace
{
    std::string num(double x)
    {
        std::ostringstream os;
        os.precision(3);
        os << x;
        return os.str();
    }

    risfb::ChannelEnvironment random_env(const risfb::SystemGeometry &g, double kb, double km, int lb, int lm,
                                         risfb::RandomStream &rng)
    {
        return risfb::sample_environment(kb, km, lb, lm, risfb::los_angles_from_geometry(g), rng);
    }
}

std::pair<int, int> risfb::exhaustive_hop_search(const arma::cx_vec &g, const HopCodebook &cb)
{
    const double gn = arma::norm(g);
    const arma::cx_vec gt = gn > 0.0 ? arma::cx_vec(g / gn) : g;
    const int n_l = 1 << cb.phase_bits;
    std::pair<int, int> best{1, 1};
    double best_v = -1.0;
    for (int i_n = 1; i_n <= int(cb.rvq.n_cols); ++i_n)
        for (int i_l = 1; i_l <= n_l; ++i_l)
        {
            const double v = std::norm(arma::cdot(gt, hop_codeword(cb, i_l, i_n)));
            if (v > best_v)
            {
                best_v = v;
                best = {i_l, i_n};
            }
        }
    return best;
}

std::uint64_t risfb::exhaustive_full_search(const ChannelEnvironment &env, const CascadedCodebook &cb)
{
    const arma::cx_vec x = arma::conj(arma::kron(env.g_b, env.g_m));
    const auto &a = cb.alloc;
    std::uint64_t best = 1;
    double best_v = -1.0;
    // enumerate in composite-index order so ties resolve to the smallest index
    const std::uint64_t n = std::uint64_t(1) << a.total();
    for (std::uint64_t i = 1; i <= n; ++i)
    {
        const auto [i_bl, i_bn, i_ml, i_mn] = decompose_index(i, a);
        const arma::cx_vec w = arma::kron(hop_codeword(cb.bs, i_bl, i_bn), hop_codeword(cb.ms, i_ml, i_mn));
        const double v = std::norm(arma::cdot(x, w));
        if (v > best_v)
        {
            best_v = v;
            best = i;
        }
    }
    return best;
}

std::vector<risfb::CheckResult> risfb::run_verify_suite(std::uint64_t seed)
{
    std::vector<CheckResult> out;
    SystemGeometry g;
    RandomStream rng(derive_seed(seed, 0xF00D));

    { // direct and factorized effective channel agree
        double worst = 0.0;
        for (int t = 0; t < 100; ++t)
        {
            const auto env = random_env(g, rng.uniform(0.0, 10.0), rng.uniform(0.0, 10.0), 3 + t % 5, 3 + t % 7, rng);
            arma::vec psi(g.n_r());
            for (auto &p : psi)
                p = rng.uniform(0.0, 2.0 * M_PI);
            const arma::cx_vec d = effective_channel(build_H(env, g), build_h(env, g), psi);
            const arma::cx_vec f = effective_channel_factorized(env, g, build_A(env, g, psi));
            worst = std::max(worst, arma::norm(d - f) / arma::norm(d));
        }
        out.push_back({"effective channel factorization", worst <= 1e-10, "max rel err " + num(worst)});
    }

    { // quantized LoS phase error bound
        bool ok = true;
        for (int t = 0; t < 1000 && ok; ++t)
        {
            const int bits = t % 6;
            const cx gl = rng.cn(), ni = rng.cn();
            const int idx = quantize_los_phase(gl, ni, 0.7, 0.7, bits);
            const double d = std::arg(std::conj(gl) * phase_codeword(idx, bits) * std::conj(ni));
            ok = std::abs(d) < M_PI / std::exp2(bits);
        }
        out.push_back({"LoS phase error bound", ok, "1000 draws"});
    }

    { // Kronecker-factorized search equals the full search
        int agree = 0;
        for (int t = 0; t < 50; ++t)
        {
            const BitAllocation a{1, 1, 1, 1};
            const auto env = random_env(g, 1.0, 2.0, 4, 5, rng);
            const auto cb = make_codebook(a, env.k_b, env.k_m, env.l_b, env.l_m, derive_seed(seed, t));
            const auto hb = exhaustive_hop_search(arma::conj(env.g_b), cb.bs);
            const auto hm = exhaustive_hop_search(arma::conj(env.g_m), cb.ms);
            agree += compose_index(hb.first, hb.second, hm.first, hm.second, a) == exhaustive_full_search(env, cb);
        }
        out.push_back({"factorized search equals full search", agree == 50, std::to_string(agree) + "/50"});
    }

    { // allocation sums
        bool ok = true;
        for (int b = 0; b <= 24 && ok; ++b)
            for (double kdb : {-30.0, -5.0, 0.0, 10.0})
            {
                ScenarioParams p;
                p.k_b = db_to_linear(kdb);
                p.k_m = db_to_linear(-kdb / 2);
                const auto a = allocate(b, p).alloc;
                ok = ok && a.total() == b && a.b_bl >= 0 && a.b_bn >= 0 && a.b_ml >= 0 && a.b_mn >= 0;
            }
        out.push_back({"allocation sum conservation", ok, "b in [0, 24]"});
    }

    { // aligned LoS-LoS column has unit norm
        const auto env = random_env(g, 1.0, 1.0, 3, 3, rng);
        const auto A = build_A(env, g, optimal_phases(env, g).psi);
        const double e = std::abs(arma::norm(A.col(0)) - 1.0);
        out.push_back({"aligned cascaded LoS column", e <= 1e-10, "err " + num(e)});
    }

    { // bit-identical output across thread counts
        SweepSpec s;
        s.base.b = 6;
        s.variable = SweepVariable::k_b_db;
        s.values = {{0.0, 0, 0, "0"}, {10.0, 0, 0, "10"}};
        s.trials = 64;
        s.seed = seed;
        std::ostringstream a, b;
        write_csv(a, run_sweep(s, 1));
        write_csv(b, run_sweep(s, 3));
        out.push_back({"CSV identical across thread counts", a.str() == b.str(), "1 vs 3 threads"});
    }
    return out;
}
