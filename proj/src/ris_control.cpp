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

#include "risfb/ris_control.hpp"

#include <cmath>

namespace
{
    struct RisFreq
    {
        double v, h;
    };

    RisFreq ris_freq(const risfb::SystemGeometry &geom, const risfb::Direction &d)
    {
        using risfb::Axis;
        return {risfb::spatial_frequency(geom.spacing_r_v, d.theta, d.phi, Axis::vertical),
                risfb::spatial_frequency(geom.spacing_r_h, d.theta, d.phi, Axis::horizontal)};
    }
}

double risfb::wrap_phase(double x)
{
    double r = std::fmod(x, 2.0 * M_PI);
    if (r < 0.0)
        r += 2.0 * M_PI;
    if (r >= 2.0 * M_PI) // fmod of tiny negatives
        r = 0.0;
    return r;
}

double risfb::omega(int l, int i, int s, const arma::vec &psi, const ChannelEnvironment &env, const SystemGeometry &geom)
{
    const int n_r = geom.n_r();
    if (l < 1 || l > env.l_b || i < 1 || i > env.l_m || s < 1 || s > n_r || int(psi.n_elem) != n_r)
        throw IndexOutOfRange("omega index out of range");

    const auto fr = ris_freq(geom, env.angles.ris_aoa[l - 1]);
    const auto ft = ris_freq(geom, env.angles.ris_aod[i - 1]);
    const auto [v, h] = index_split(s, geom.n_r_h);
    return psi[s - 1] + double(v - 1) * (fr.v - ft.v) + double(h - 1) * (fr.h - ft.h);
}

risfb::ReflectionPhases risfb::optimal_phases(const LosAngles &los, const SystemGeometry &geom,
                                              int reference_element, double reference_phase)
{
    const int n_r = geom.n_r();
    if (reference_element < 1 || reference_element > n_r)
        throw IndexOutOfRange("reference element out of range");

    const auto fr = ris_freq(geom, los.ris_aoa);
    const auto ft = ris_freq(geom, los.ris_aod);
    const double d_theta = fr.v - ft.v, d_phi = fr.h - ft.h;
    const auto [vc, hc] = index_split(reference_element, geom.n_r_h);

    ReflectionPhases out;
    out.reference_element = reference_element;
    out.psi.set_size(n_r);
    for (int s = 1; s <= n_r; ++s)
    {
        const auto [v, h] = index_split(s, geom.n_r_h);
        out.psi[s - 1] = wrap_phase(reference_phase + double(vc - v) * d_theta + double(hc - h) * d_phi);
    }
    return out;
}

risfb::ReflectionPhases risfb::optimal_phases(const ChannelEnvironment &env, const SystemGeometry &geom,
                                              int reference_element, double reference_phase)
{
    LosAngles los{env.angles.bs_aod.at(0), env.angles.ris_aoa.at(0), env.angles.ris_aod.at(0)};
    return optimal_phases(los, geom, reference_element, reference_phase);
}
