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

#include "risfb/channel.hpp"

namespace risfb
{
    // Four-way split of the feedback budget
    struct BitAllocation
    {
        int b_bl = 0, b_bn = 0, b_ml = 0, b_mn = 0;

        int total() const { return b_bl + b_bn + b_ml + b_mn; }
        int b_b() const { return b_bl + b_bn; }
        int b_m() const { return b_ml + b_mn; }
        int b_l() const { return b_bl + b_ml; }
        int b_n() const { return b_bn + b_mn; }
        bool operator==(const BitAllocation &) const = default;
    };

    std::string to_string(const BitAllocation &a);

    // Largest sub-codebook we are willing to materialize
    constexpr int max_codebook_bits = 22;

    // Codebook for one hop: 2^phase_bits LoS phases and 2^rvq_bits NLoS directions
    struct HopCodebook
    {
        int phase_bits = 0;
        arma::cx_mat rvq; // (L-1) x 2^rvq_bits, unit-norm columns
        double k = 0.0;   // Rician factor (linear)

        double w_los() const { return std::sqrt(k / (k + 1.0)); }
        double w_nlos() const { return std::sqrt(1.0 / (k + 1.0)); }
    };

    struct CascadedCodebook
    {
        HopCodebook bs, ms;
        BitAllocation alloc;
        std::uint64_t seed = 0;
    };

    struct HopQuantization
    {
        int i_l = 1, i_n = 1;
        arma::cx_vec w;
    };

    struct QuantizationResult
    {
        int i_bl = 1, i_bn = 1, i_ml = 1, i_mn = 1;
        std::uint64_t i_b = 1, i_m = 1, i = 1;
        arma::cx_vec w;        // unit norm, length L_B L_M
        double gain_norm = 0.0; // || g_b kron g_m ||
    };

    // 2^bits codewords as columns, drawn sequentially from one stream so that
    // a larger codebook extends a smaller one with the same seed
    arma::cx_mat generate_rvq(int dim, int bits, std::uint64_t seed);

    // exp(j index 2 pi / 2^bits), index in [1, 2^bits]
    cx phase_codeword(int index, int bits);

    // 1-based argmax of |dir^H w_i|^2, smallest index wins ties
    int quantize_nlos(const arma::cx_vec &dir, const arma::cx_mat &rvq);

    // 1-based index maximizing |w_los conj(g_los) e^{j eps_i} + w_nlos nlos_inner|^2
    int quantize_los_phase(cx g_los, cx nlos_inner, double w_los, double w_nlos, int phase_bits);

    // Two-stage quantization of one hop's gain vector (NLoS direction first, then LoS phase)
    HopQuantization quantize_hop(const arma::cx_vec &g, const HopCodebook &cb);

    // Rician-weighted hop codeword [w_los e^{j eps}, w_nlos w_N]
    arma::cx_vec hop_codeword(const HopCodebook &cb, int i_l, int i_n);

    CascadedCodebook make_codebook(const BitAllocation &alloc, double k_b, double k_m, int l_b, int l_m,
                                   std::uint64_t seed);

    // Quantizes the feedback vectors conj(g_b) and conj(g_m); with the stored-gain
    // convention h_eff = scale * A * conj(g_b kron g_m), so these are the directions
    // that reconstruct h_eff as scale * ||g|| * A * w
    QuantizationResult quantize_channel(const ChannelEnvironment &env, const CascadedCodebook &cb);

    // Composite index bookkeeping
    std::uint64_t compose_index(int i_bl, int i_bn, int i_ml, int i_mn, const BitAllocation &alloc);
    std::array<int, 4> decompose_index(std::uint64_t i, const BitAllocation &alloc);

    // i - 1 written as exactly b bits, most significant first ('0'/'1' characters)
    std::string encode_feedback(const QuantizationResult &q, const BitAllocation &alloc);
    std::array<int, 4> decode_feedback(const std::string &bits, const BitAllocation &alloc);

    // Q1 * gain_norm * A * w
    arma::cx_vec reconstruct_channel(const QuantizationResult &q, const arma::cx_mat &A, double q1);

    // Unstructured baseline: plain RVQ of dimension L_B with 2^floor(b/2) codewords
    // and of dimension L_M with 2^ceil(b/2) codewords
    struct NaiveCodebook
    {
        arma::cx_mat bs, ms;
        int bits_b = 0, bits_m = 0;
    };

    NaiveCodebook make_naive_codebook(int b, int l_b, int l_m, std::uint64_t seed);
    QuantizationResult quantize_naive(const ChannelEnvironment &env, const NaiveCodebook &cb);
}
