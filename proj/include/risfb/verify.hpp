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

#include <cstdint>
#include <string>
#include <vector>

#include "risfb/codebook.hpp"

namespace risfb
{
    struct CheckResult
    {
        std::string name;
        bool pass = false;
        std::string detail;
    };

    // Exhaustive argmax of |g~^H w|^2 over every structured codeword of one hop.
    // Returns (i_l, i_n).
    std::pair<int, int> exhaustive_hop_search(const arma::cx_vec &g, const HopCodebook &cb);

    // Exhaustive argmax over the full cascaded codebook; returns the composite index
    std::uint64_t exhaustive_full_search(const ChannelEnvironment &env, const CascadedCodebook &cb);

    // Quick invariant suite behind `ris_sim verify`
    std::vector<CheckResult> run_verify_suite(std::uint64_t seed);
}
