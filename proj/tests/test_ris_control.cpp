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

#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "risfb/ris_control.hpp"

using namespace risfb;
using Catch::Approx;

namespace
{
    SystemGeometry geom_of(int bv, int bh, int rv, int rh)
    {
        SystemGeometry g;
        g.n_b_v = bv, g.n_b_h = bh, g.n_r_v = rv, g.n_r_h = rh;
        return g;
    }

    LosAngles random_los(RandomStream &rng)
    {
        return {sample_nlos_direction(rng), sample_nlos_direction(rng), sample_nlos_direction(rng)};
    }
}

TEST_CASE("Cascaded phase - examples and element-wise oracle")
{
    SystemGeometry g = geom_of(2, 4, 3, 5);
    RandomStream rng(21);
    auto env = sample_environment(1.0, 1.0, 4, 5, random_los(rng), rng);
    arma::vec zero(g.n_r(), arma::fill::zeros);

    for (int l = 1; l <= env.l_b; ++l)
        for (int i = 1; i <= env.l_m; ++i)
            CHECK(omega(l, i, 1, zero, env, g) == 0.0);

    arma::vec psi(g.n_r());
    for (auto &x : psi)
        x = rng.uniform(0.0, 2.0 * M_PI);
    std::vector<double> psi_v(psi.begin(), psi.end());

    // Coinciding arrival and departure directions leave only the element phase
    auto same = env;
    same.angles.ris_aod[2] = same.angles.ris_aoa[1];
    for (int s = 1; s <= g.n_r(); ++s)
        CHECK(omega(2, 3, s, psi, same, g) == Approx(psi[s - 1]).epsilon(1e-14));

    for (int l = 1; l <= env.l_b; ++l)
        for (int i = 1; i <= env.l_m; ++i)
            for (int s = 1; s <= g.n_r(); ++s)
                CHECK(omega(l, i, s, psi, env, g) ==
                      Approx(oracle::omega(env, g, psi_v, l - 1, i - 1, s - 1)).margin(1e-12));

    CHECK_THROWS_AS(omega(0, 1, 1, psi, env, g), IndexOutOfRange);
    CHECK_THROWS_AS(omega(1, env.l_m + 1, 1, psi, env, g), IndexOutOfRange);
    CHECK_THROWS_AS(omega(1, 1, g.n_r() + 1, psi, env, g), IndexOutOfRange);
}

TEST_CASE("Optimal phases - coherent LoS alignment")
{
    RandomStream rng(22);

    // Mirror-symmetric arrival and departure: every element keeps the reference phase
    SystemGeometry g = geom_of(2, 4, 3, 5);
    LosAngles los = random_los(rng);
    los.ris_aod = los.ris_aoa;
    auto ph = optimal_phases(los, g, 1, 0.4);
    for (double x : ph.psi)
        CHECK(x == Approx(0.4).epsilon(1e-14));

    for (int t = 0; t < 50; ++t)
    {
        SystemGeometry gt = geom_of(2, 2, 1 + t % 6, 2 + t % 7);
        auto env = sample_environment(1.0, 1.0, 3, 3, random_los(rng), rng);
        const int c = 1 + t % gt.n_r();
        auto p = optimal_phases(env, gt, c, rng.uniform(0.0, 2.0 * M_PI));
        REQUIRE(p.reference_element == c);
        std::vector<double> psi_v(p.psi.begin(), p.psi.end());
        double worst = 0.0;
        oracle::cx sum = 0.0;
        const double ref = oracle::omega(env, gt, psi_v, 0, 0, 0);
        for (int s = 0; s < gt.n_r(); ++s)
        {
            CHECK(p.psi[s] >= 0.0);
            CHECK(p.psi[s] < 2.0 * M_PI);
            const double om = oracle::omega(env, gt, psi_v, 0, 0, s);
            worst = std::max(worst, oracle::circ_dist(om, ref));
            sum += oracle::expj(om);
        }
        CHECK(worst <= 1e-10);
        CHECK(std::norm(sum) == Approx(double(gt.n_r()) * gt.n_r()).epsilon(1e-12));
    }

    CHECK_THROWS_AS(optimal_phases(los, g, 0, 0.0), IndexOutOfRange);
}

TEST_CASE("Phase wrapping - half-open interval")
{
    CHECK(wrap_phase(0.0) == 0.0);
    CHECK(wrap_phase(2.0 * M_PI) == 0.0);
    CHECK(wrap_phase(-1e-20) == 0.0);
    CHECK(wrap_phase(-M_PI / 2) == Approx(1.5 * M_PI).epsilon(1e-15));
    CHECK(wrap_phase(7.0 * M_PI) == Approx(M_PI).epsilon(1e-14));
}

TEST_CASE("Gram matrix of the cascaded directions - aligned entry is exact")
{
    SystemGeometry g = geom_of(8, 8, 8, 8);
    RandomStream rng(23);
    const auto los = los_angles_from_geometry(g);
    for (int t = 0; t < 10; ++t)
    {
        auto env = sample_environment(1.0, 1.0, 4, 4, los, rng);
        arma::cx_mat A = build_A(env, g, optimal_phases(env, g).psi);
        arma::cx_mat G = A.t() * A;
        CHECK(std::abs(G(0, 0) - 1.0) <= 1e-10);
    }
}

TEST_CASE("Gram matrix of the cascaded directions - average diagonal is 1/N_R")
{
    // Each unaligned diagonal entry is |c|^2 with c a normalized sum of N_R
    // unit phasors, so only its average over draws settles at 1/N_R.
    SystemGeometry g = geom_of(4, 4, 16, 16);
    RandomStream rng(24);
    const auto los = los_angles_from_geometry(g);
    const double n_r = g.n_r();
    double acc = 0.0;
    int cnt = 0;
    for (int t = 0; t < 200; ++t)
    {
        auto env = sample_environment(1.0, 1.0, 3, 3, los, rng);
        arma::cx_mat A = build_A(env, g, optimal_phases(env, g).psi);
        arma::cx_mat G = A.t() * A;
        for (arma::uword n = 1; n < G.n_rows; ++n)
            acc += std::real(G(n, n)), ++cnt;
    }
    CHECK(acc / cnt * n_r == Approx(1.0).margin(0.15));
}

TEST_CASE("Gram matrix of the cascaded directions - per-draw diagonal within 5 percent of 1/N_R", "[!shouldfail]")
{
    // Literal per-draw version of the asymptotic statement. The deviation of an
    // unaligned diagonal entry from 1/N_R is itself of order 1/N_R on a typical
    // draw, so this check is expected to fail.
    SystemGeometry g = geom_of(16, 16, 32, 32);
    RandomStream rng(25);
    const auto los = los_angles_from_geometry(g);
    const double n_r = g.n_r();
    auto env = sample_environment(1.0, 1.0, 3, 3, los, rng);
    arma::cx_mat A = build_A(env, g, optimal_phases(env, g).psi);
    arma::cx_mat G = A.t() * A;
    double worst = 0.0;
    for (arma::uword n = 1; n < G.n_rows; ++n)
        worst = std::max(worst, std::abs(std::real(G(n, n)) - 1.0 / n_r));
    REQUIRE(worst <= 0.05 / n_r);
}
