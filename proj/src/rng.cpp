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

#include "risfb/rng.hpp"

#include <cmath>

std::uint64_t risfb::splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t risfb::derive_seed(std::uint64_t root, std::uint64_t a, std::uint64_t b, std::uint64_t c)
{
    std::uint64_t s = splitmix64(root);
    s = splitmix64(s ^ a);
    s = splitmix64(s ^ b);
    return splitmix64(s ^ c);
}

double risfb::RandomStream::uniform(double lo, double hi)
{
    // 53-bit mantissa draw; std::uniform_real_distribution output is not portable across libraries
    double u = double(eng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

double risfb::RandomStream::normal()
{
    return nd_(eng_);
}

risfb::cx risfb::RandomStream::cn()
{
    double re = normal(), im = normal();
    return {re * M_SQRT1_2, im * M_SQRT1_2};
}
