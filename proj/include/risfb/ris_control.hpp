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

#include "risfb/channel.hpp"

namespace risfb
{
    struct ReflectionPhases
    {
        arma::vec psi;             // radians in [0, 2 pi), length N_R
        int reference_element = 1; // 1-based
    };

    // Reduce to [0, 2 pi)
    double wrap_phase(double x);

    // Phase of the (l, i) cascaded path at RIS element s (all 1-based)
    double omega(int l, int i, int s, const arma::vec &psi, const ChannelEnvironment &env, const SystemGeometry &geom);

    // Phases that make the LoS-LoS cascaded path add coherently at every element
    ReflectionPhases optimal_phases(const LosAngles &los, const SystemGeometry &geom,
                                    int reference_element = 1, double reference_phase = 0.0);

    ReflectionPhases optimal_phases(const ChannelEnvironment &env, const SystemGeometry &geom,
                                    int reference_element = 1, double reference_phase = 0.0);
}
