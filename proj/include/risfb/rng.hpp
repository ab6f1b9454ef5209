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
#include <random>

#include "risfb/types.hpp"

namespace risfb
{
    // splitmix64 finalizer, used to derive independent sub-seeds
    std::uint64_t splitmix64(std::uint64_t x);

    // Counter-based seed derivation: seed = mix(mix(mix(mix(root) ^ a) ^ b) ^ c).
    // Identical inputs give identical streams regardless of thread layout.
    std::uint64_t derive_seed(std::uint64_t root, std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0);

    // Thin wrapper around a 64-bit Mersenne twister with the draws the simulator needs
    class RandomStream
    {
    public:
        explicit RandomStream(std::uint64_t seed) : eng_(seed) {}

        double uniform(double lo, double hi);
        double normal();
        // Circularly-symmetric complex Gaussian with unit variance
        cx cn();

        std::mt19937_64 &engine() { return eng_; }

    private:
        std::mt19937_64 eng_;
        std::normal_distribution<double> nd_{0.0, 1.0};
    };
}
