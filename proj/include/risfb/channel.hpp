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
#include <vector>

#include "risfb/rng.hpp"
#include "risfb/types.hpp"

namespace risfb
{
    using Vec3 = std::array<double, 3>;

    // Array sizes, spacings (in wavelengths) and node positions (meters).
    // Defaults follow the reference deployment: 2x4 BS UPA, 3x5 RIS.
    struct SystemGeometry
    {
        int n_b_v = 2, n_b_h = 4;
        int n_r_v = 3, n_r_h = 5;
        double spacing_b_v = 0.5, spacing_b_h = 0.5;
        double spacing_r_v = 0.5, spacing_r_h = 0.5;
        Vec3 pos_b = {100.0, -100.0, 10.0};
        Vec3 pos_r = {0.0, 0.0, 0.0};
        Vec3 pos_m = {4.0, 5.0, -3.0};

        int n_b() const { return n_b_v * n_b_h; }
        int n_r() const { return n_r_v * n_r_h; }

        // Throws ValidationError or DegenerateGeometry
        void validate() const;
    };

    // Elevation from the +z axis, azimuth in the x-y plane measured from +x
    struct Direction
    {
        double theta = 0.0;
        double phi = 0.0;
    };

    // Per-path angles; entry 0 is the LoS path
    struct PathAngles
    {
        std::vector<Direction> bs_aod;  // length L_B
        std::vector<Direction> ris_aoa; // length L_B
        std::vector<Direction> ris_aod; // length L_M
    };

    struct LosAngles
    {
        Direction bs_aod, ris_aoa, ris_aod;
    };

    // Fading state of both hops. g_m holds the conjugated RIS-MS gains so that
    // the cascaded channel is a plain Kronecker form in (g_b, g_m).
    struct ChannelEnvironment
    {
        double k_b = 1.0, k_m = 1.0;
        int l_b = 3, l_m = 3;
        PathAngles angles;
        arma::cx_vec g_b;
        arma::cx_vec g_m;
    };

    // Unit-norm ULA response, entry k is exp(j k z) / sqrt(n)
    arma::cx_vec ula_response(int n, double z);

    // Kronecker product of vertical and horizontal ULA responses
    arma::cx_vec upa_response(int n_v, int n_h, double theta_sf, double phi_sf);

    enum class Axis
    {
        vertical,
        horizontal
    };

    double spatial_frequency(double spacing_over_lambda, double theta, double phi, Axis axis);

    // Direction of a nonzero 3-vector; phi = 0 on the z axis
    Direction direction_of(const Vec3 &d);

    LosAngles los_angles_from_geometry(const SystemGeometry &geom);

    // Array responses of the BS and RIS for a given direction
    arma::cx_vec bs_response(const SystemGeometry &geom, const Direction &dir);
    arma::cx_vec ris_response(const SystemGeometry &geom, const Direction &dir);

    // Entry 0: sqrt(k (l-1)) exp(j eta); entries 1..l-1: CN(0,1)
    arma::cx_vec sample_path_gains(double k, int l, RandomStream &rng);

    // NLoS angles: theta ~ U[0, pi], phi ~ U[-pi/2, pi/2]
    Direction sample_nlos_direction(RandomStream &rng);

    // Draws NLoS angles and the gains of both hops around fixed LoS angles
    ChannelEnvironment sample_environment(double k_b, double k_m, int l_b, int l_m,
                                          const LosAngles &los, RandomStream &rng);

    // BS-RIS channel, N_R x N_B
    arma::cx_mat build_H(const ChannelEnvironment &env, const SystemGeometry &geom);

    // RIS-MS channel, length N_R
    arma::cx_vec build_h(const ChannelEnvironment &env, const SystemGeometry &geom);

    // 1-based (outer, inner) with n = (outer - 1) * period + inner
    std::pair<int, int> index_split(int n, int period);

    // Cascaded path direction matrix, N_B x (L_B L_M); column l*L_M + i (0-based)
    // is a_B(l) * sum_s conj(a_R,r(l)[s]) a_R,t(i)[s] exp(-j psi_s)
    arma::cx_mat build_A(const ChannelEnvironment &env, const SystemGeometry &geom, const arma::vec &psi);

    // Scale factor in front of the factorized cascaded channel
    double cascade_scale(int n_b, int n_r, double k_b, double k_m, int l_b, int l_m);

    // h_eff with h_eff^H = h^H diag(exp(j psi)) H
    arma::cx_vec effective_channel(const arma::cx_mat &H, const arma::cx_vec &h, const arma::vec &psi);

    // Same channel from the factorized form: scale * A * conj(g_b kron g_m)
    arma::cx_vec effective_channel_factorized(const ChannelEnvironment &env, const SystemGeometry &geom,
                                              const arma::cx_mat &A);
}
