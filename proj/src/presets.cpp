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

// Built-in scenario files, one per reference figure setup.
// All share the reference deployment: 2x4 BS, RIS at the origin, half-wavelength spacing.

#include "risfb/config.hpp"

#include <map>

namespace
{
    const char *const common = R"(
[geometry]
bs_array = 2x4
ris_array = 3x5
pos_bs = 100,-100,10
pos_ris = 0,0,0
pos_ms = 4,5,-3

[link]
e_db = 0
noise_db = 0

[run]
trials = 2000
seed = 1
)";

    const std::map<std::string, std::string> &table()
    {
        static const std::map<std::string, std::string> m = {
            {"fig2", std::string("# Rate-loss bound tightness versus RIS size\n") + common + R"(
[environment]
l_b = 3
l_m = 10

[link]
b = 10

[run]
strategies = perfect,cascaded_adaptive

[sweep fig2_k-5]
variable = n_r
values = 3x5, 6x10, 12x20
k_b_db = -5
k_m_db = -5

[sweep fig2_k0]
variable = n_r
values = 3x5, 6x10, 12x20
k_b_db = 0
k_m_db = 0

[sweep fig2_k10]
variable = n_r
values = 3x5, 6x10, 12x20
k_b_db = 10
k_m_db = 10
)"},
            {"fig3", std::string("# Adaptive versus equal bit partitioning over transmit power\n") + common + R"(
[geometry]
ris_array = 12x20

[environment]
l_b = 3
l_m = 17

[link]
b = 20

[run]
strategies = perfect,cascaded_adaptive,cascaded_equal

[sweep fig3_a]
variable = e_db
values = -10, -5, 0, 5, 10, 15, 20
k_b_db = -10
k_m_db = -10

[sweep fig3_b]
variable = e_db
values = -10, -5, 0, 5, 10, 15, 20
k_b_db = 0
k_m_db = -10

[sweep fig3_c]
variable = e_db
values = -10, -5, 0, 5, 10, 15, 20
k_b_db = 0
k_m_db = 0
)"},
            {"fig4", std::string("# Equal path numbers, RIS-MS hop without LoS\n") + common + R"(
[environment]
k_m_db = -30
l_b = 6
l_m = 6

[sweep fig4_b4]
variable = k_b_db
values = -30, -20, -10, 0, 10, 20
b = 4

[sweep fig4_b20]
variable = k_b_db
values = -30, -20, -10, 0, 10, 20
b = 20
)"},
            {"fig5", std::string("# Equal path numbers, strong RIS-MS LoS\n") + common + R"(
[environment]
k_m_db = 10
l_b = 6
l_m = 6

[sweep fig5_b20]
variable = k_b_db
values = 10, 15, 20, 25, 30
b = 20
)"},
            {"fig6", std::string("# Equal path numbers, balanced RIS-MS hop\n") + common + R"(
[environment]
k_m_db = 0
l_b = 6
l_m = 6

[sweep fig6_b4]
variable = k_b_db
values = 0, 5, 10, 15, 20
b = 4

[sweep fig6_b20]
variable = k_b_db
values = 0, 5, 10, 15, 20
b = 20
)"},
            {"fig7", std::string("# Equal Rician factors, growing RIS-MS path count\n") + common + R"(
[environment]
k_b_db = 0
k_m_db = 0
l_b = 6

[sweep fig7_b4]
variable = l_m
values = 6, 12, 18, 24, 30
b = 4

[sweep fig7_b12]
variable = l_m
values = 6, 12, 18, 24, 30
b = 12

[sweep fig7_b20]
variable = l_m
values = 6, 12, 18, 24, 30
b = 20
)"},
            {"fig8", std::string("# Growing feedback budget, asymmetric hops\n") + common + R"(
[environment]
k_b_db = 10
k_m_db = 0
l_b = 3
l_m = 10

[sweep fig8_nr15]
variable = b
values = 4, 8, 12, 16, 20
ris_array = 3x5

[sweep fig8_nr100]
variable = b
values = 4, 8, 12, 16, 20
ris_array = 10x10
)"},
        };
        return m;
    }
}

std::vector<std::string> risfb::preset_names()
{
    std::vector<std::string> out;
    for (const auto &[k, v] : table())
        out.push_back(k);
    return out;
}

const std::string &risfb::preset_text(const std::string &name)
{
    const auto it = table().find(name);
    if (it == table().end())
        throw ValidationError("unknown preset '" + name + "'");
    return it->second;
}
