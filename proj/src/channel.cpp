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

#include "risfb/channel.hpp"

#include <algorithm>
#include <cmath>

namespace
{
    bool same_point(const risfb::Vec3 &a, const risfb::Vec3 &b)
    {
        return a[0] == b[0] && a[1] == b[1] && a[2] == b[2];
    }

    risfb::Vec3 minus(const risfb::Vec3 &a, const risfb::Vec3 &b)
    {
        return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
    }

    void check_path_count(int l)
    {
        if (l < 3)
            throw risfb::InvalidPathCount("path count must be ≥ 3");
    }
}

void risfb::SystemGeometry::validate() const
{
    if (n_b_v < 1 || n_b_h < 1 || n_r_v < 1 || n_r_h < 1)
        throw ValidationError("array dimensions must be ≥ 1");
    if (!(spacing_b_v > 0.0 && spacing_b_h > 0.0 && spacing_r_v > 0.0 && spacing_r_h > 0.0))
        throw ValidationError("element spacings must be > 0");
    if (same_point(pos_b, pos_r))
        throw DegenerateGeometry("BS and RIS positions coincide");
    if (same_point(pos_r, pos_m))
        throw DegenerateGeometry("RIS and MS positions coincide");
}

arma::cx_vec risfb::ula_response(int n, double z)
{
    arma::cx_vec a(n);
    const double s = 1.0 / std::sqrt(double(n));
    for (int k = 0; k < n; ++k)
        a[k] = std::polar(s, double(k) * z);
    return a;
}

arma::cx_vec risfb::upa_response(int n_v, int n_h, double theta_sf, double phi_sf)
{
    return arma::kron(ula_response(n_v, theta_sf), ula_response(n_h, phi_sf));
}

double risfb::spatial_frequency(double spacing_over_lambda, double theta, double phi, Axis axis)
{
    if (axis == Axis::vertical)
        return 2.0 * M_PI * spacing_over_lambda * std::cos(theta);
    return 2.0 * M_PI * spacing_over_lambda * std::sin(theta) * std::sin(phi);
}

risfb::Direction risfb::direction_of(const Vec3 &d)
{
    const double r = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
    if (r == 0.0)
        throw DegenerateGeometry("zero-length direction");
    Direction out;
    out.theta = std::acos(std::clamp(d[2] / r, -1.0, 1.0));
    out.phi = (d[0] == 0.0 && d[1] == 0.0) ? 0.0 : std::atan2(d[1], d[0]);
    return out;
}

risfb::LosAngles risfb::los_angles_from_geometry(const SystemGeometry &geom)
{
    if (same_point(geom.pos_b, geom.pos_r))
        throw DegenerateGeometry("BS and RIS positions coincide");
    if (same_point(geom.pos_r, geom.pos_m))
        throw DegenerateGeometry("RIS and MS positions coincide");

    LosAngles los;
    los.bs_aod = direction_of(minus(geom.pos_r, geom.pos_b));
    los.ris_aoa = direction_of(minus(geom.pos_b, geom.pos_r));
    los.ris_aod = direction_of(minus(geom.pos_m, geom.pos_r));
    return los;
}

arma::cx_vec risfb::bs_response(const SystemGeometry &geom, const Direction &dir)
{
    return upa_response(geom.n_b_v, geom.n_b_h,
                        spatial_frequency(geom.spacing_b_v, dir.theta, dir.phi, Axis::vertical),
                        spatial_frequency(geom.spacing_b_h, dir.theta, dir.phi, Axis::horizontal));
}

arma::cx_vec risfb::ris_response(const SystemGeometry &geom, const Direction &dir)
{
    return upa_response(geom.n_r_v, geom.n_r_h,
                        spatial_frequency(geom.spacing_r_v, dir.theta, dir.phi, Axis::vertical),
                        spatial_frequency(geom.spacing_r_h, dir.theta, dir.phi, Axis::horizontal));
}

arma::cx_vec risfb::sample_path_gains(double k, int l, RandomStream &rng)
{
    check_path_count(l);
    if (k < 0.0)
        throw ValidationError("Rician factor must be ≥ 0");
    arma::cx_vec g(l);
    const double eta = rng.uniform(0.0, 2.0 * M_PI);
    g[0] = std::polar(std::sqrt(k * double(l - 1)), eta);
    for (int i = 1; i < l; ++i)
        g[i] = rng.cn();
    return g;
}

risfb::Direction risfb::sample_nlos_direction(RandomStream &rng)
{
    Direction d;
    d.theta = rng.uniform(0.0, M_PI);
    d.phi = rng.uniform(-M_PI_2, M_PI_2);
    return d;
}

risfb::ChannelEnvironment risfb::sample_environment(double k_b, double k_m, int l_b, int l_m,
                                                    const LosAngles &los, RandomStream &rng)
{
    check_path_count(l_b);
    check_path_count(l_m);

    ChannelEnvironment env;
    env.k_b = k_b;
    env.k_m = k_m;
    env.l_b = l_b;
    env.l_m = l_m;

    auto &a = env.angles;
    a.bs_aod.assign(1, los.bs_aod);
    a.ris_aoa.assign(1, los.ris_aoa);
    a.ris_aod.assign(1, los.ris_aod);
    for (int l = 1; l < l_b; ++l)
    {
        a.bs_aod.push_back(sample_nlos_direction(rng));
        a.ris_aoa.push_back(sample_nlos_direction(rng));
    }
    for (int i = 1; i < l_m; ++i)
        a.ris_aod.push_back(sample_nlos_direction(rng));

    env.g_b = sample_path_gains(k_b, l_b, rng);
    // CN(0,1) and a uniform LoS phase are conjugation invariant, so the stored
    // (conjugated) RIS-MS gains have the same law as the physical ones
    env.g_m = sample_path_gains(k_m, l_m, rng);
    return env;
}

arma::cx_mat risfb::build_H(const ChannelEnvironment &env, const SystemGeometry &geom)
{
    const int n_b = geom.n_b(), n_r = geom.n_r();
    const double scale = std::sqrt(double(n_b) * n_r / ((1.0 + env.k_b) * (env.l_b - 1)));
    arma::cx_mat H(n_r, n_b, arma::fill::zeros);
    for (int l = 0; l < env.l_b; ++l)
    {
        arma::cx_vec ar = ris_response(geom, env.angles.ris_aoa[l]);
        arma::cx_vec ab = bs_response(geom, env.angles.bs_aod[l]);
        H += env.g_b[l] * ar * ab.t();
    }
    return scale * H;
}

arma::cx_vec risfb::build_h(const ChannelEnvironment &env, const SystemGeometry &geom)
{
    const int n_r = geom.n_r();
    const double scale = std::sqrt(double(n_r) / ((1.0 + env.k_m) * (env.l_m - 1)));
    arma::cx_vec h(n_r, arma::fill::zeros);
    for (int i = 0; i < env.l_m; ++i)
        h += std::conj(env.g_m[i]) * ris_response(geom, env.angles.ris_aod[i]);
    return scale * h;
}

std::pair<int, int> risfb::index_split(int n, int period)
{
    if (n < 1 || period < 1)
        throw IndexOutOfRange("index_split needs n ≥ 1 and period ≥ 1");
    const int outer = (n + period - 1) / period;
    return {outer, n - (outer - 1) * period};
}

arma::cx_mat risfb::build_A(const ChannelEnvironment &env, const SystemGeometry &geom, const arma::vec &psi)
{
    const int n_r = geom.n_r();
    if (int(psi.n_elem) != n_r)
        throw ShapeMismatch("phase vector length must equal the RIS element count");

    arma::cx_vec refl(n_r);
    for (int s = 0; s < n_r; ++s)
        refl[s] = std::polar(1.0, -psi[s]);

    std::vector<arma::cx_vec> at(env.l_m);
    for (int i = 0; i < env.l_m; ++i)
        at[i] = ris_response(geom, env.angles.ris_aod[i]) % refl;

    arma::cx_mat A(geom.n_b(), env.l_b * env.l_m);
    for (int l = 0; l < env.l_b; ++l)
    {
        arma::cx_vec ab = bs_response(geom, env.angles.bs_aod[l]);
        arma::cx_vec ar = ris_response(geom, env.angles.ris_aoa[l]);
        for (int i = 0; i < env.l_m; ++i)
            A.col(l * env.l_m + i) = ab * arma::cdot(ar, at[i]);
    }
    return A;
}

double risfb::cascade_scale(int n_b, int n_r, double k_b, double k_m, int l_b, int l_m)
{
    return std::sqrt(double(n_b) * n_r * n_r / ((1.0 + k_m) * (1.0 + k_b) * (l_m - 1) * (l_b - 1)));
}

arma::cx_vec risfb::effective_channel(const arma::cx_mat &H, const arma::cx_vec &h, const arma::vec &psi)
{
    if (H.n_rows != h.n_elem || h.n_elem != psi.n_elem)
        throw ShapeMismatch("H, h and psi dimensions disagree");
    arma::cx_vec v(h.n_elem);
    for (arma::uword s = 0; s < h.n_elem; ++s)
        v[s] = std::polar(1.0, -psi[s]) * h[s];
    return H.t() * v;
}

arma::cx_vec risfb::effective_channel_factorized(const ChannelEnvironment &env, const SystemGeometry &geom,
                                                 const arma::cx_mat &A)
{
    if (int(A.n_cols) != env.l_b * env.l_m || int(A.n_rows) != geom.n_b())
        throw ShapeMismatch("A has the wrong shape for this environment");
    const double q1 = cascade_scale(geom.n_b(), geom.n_r(), env.k_b, env.k_m, env.l_b, env.l_m);
    return q1 * (A * arma::conj(arma::kron(env.g_b, env.g_m)));
}
