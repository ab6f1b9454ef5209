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

#include "risfb/codebook.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace
{
    void check_bits(int bits, int dim)
    {
        if (bits < 0)
            throw risfb::IndexOutOfRange("bit count must be ≥ 0");
        if (bits > risfb::max_codebook_bits || double(dim) * std::ldexp(1.0, bits) > std::ldexp(1.0, 26))
            throw risfb::BudgetTooLarge("codebook of " + std::to_string(bits) + " bits is too large to store");
    }

    double objective(risfb::cx g_los, risfb::cx nlos_inner, double w_los, double w_nlos, int idx, int bits)
    {
        return std::norm(w_los * std::conj(g_los) * risfb::phase_codeword(idx, bits) + w_nlos * nlos_inner);
    }
}

std::string risfb::to_string(const BitAllocation &a)
{
    return "(" + std::to_string(a.b_bl) + "," + std::to_string(a.b_bn) + "," +
           std::to_string(a.b_ml) + "," + std::to_string(a.b_mn) + ")";
}

arma::cx_mat risfb::generate_rvq(int dim, int bits, std::uint64_t seed)
{
    if (dim < 1)
        throw ShapeMismatch("RVQ dimension must be ≥ 1");
    check_bits(bits, dim);

    const arma::uword n = arma::uword(1) << bits;
    arma::cx_mat W(dim, n);
    RandomStream rng(seed);
    for (arma::uword c = 0; c < n; ++c)
    {
        double nrm;
        do // a zero draw has probability zero, but keep the loop total
        {
            for (int d = 0; d < dim; ++d)
                W(d, c) = rng.cn();
            nrm = arma::norm(W.col(c));
        } while (nrm == 0.0);
        W.col(c) /= nrm;
    }
    return W;
}

risfb::cx risfb::phase_codeword(int index, int bits)
{
    if (bits < 0 || bits > 30)
        throw IndexOutOfRange("phase bits out of range");
    const long long m = 1LL << bits;
    if (index < 1 || index > m)
        throw IndexOutOfRange("phase index out of range");
    if (index == m)
        return {1.0, 0.0};
    return std::polar(1.0, double(index) * 2.0 * M_PI / double(m));
}

int risfb::quantize_nlos(const arma::cx_vec &dir, const arma::cx_mat &rvq)
{
    if (dir.n_elem != rvq.n_rows)
        throw ShapeMismatch("NLoS direction and codebook dimensions differ");
    int best = 1;
    double best_v = -1.0;
    for (arma::uword c = 0; c < rvq.n_cols; ++c)
    {
        const double v = std::norm(arma::cdot(dir, rvq.col(c)));
        if (v > best_v)
        {
            best_v = v;
            best = int(c) + 1;
        }
    }
    return best;
}

int risfb::quantize_los_phase(cx g_los, cx nlos_inner, double w_los, double w_nlos, int phase_bits)
{
    if (phase_bits < 0 || phase_bits > 30)
        throw IndexOutOfRange("phase bits out of range");
    // objective does not depend on the index: every candidate ties
    if (w_los == 0.0 || w_nlos == 0.0 || g_los == cx(0.0) || nlos_inner == cx(0.0) || phase_bits == 0)
        return 1;

    const long long m = 1LL << phase_bits;
    const double step = 2.0 * M_PI / double(m);
    // best continuous phase: arg(conj(g_los) e^{j eps}) = arg(nlos_inner)
    double target = std::fmod(std::arg(nlos_inner) + std::arg(g_los), 2.0 * M_PI);
    if (target < 0.0)
        target += 2.0 * M_PI;
    const long long near = std::llround(target / step);

    std::vector<int> cand;
    for (long long d = -1; d <= 1; ++d)
    {
        long long idx = ((near + d) % m + m) % m;
        cand.push_back(idx == 0 ? int(m) : int(idx));
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    int best = cand.front();
    double best_v = -1.0;
    for (int idx : cand)
    {
        const double v = objective(g_los, nlos_inner, w_los, w_nlos, idx, phase_bits);
        if (v > best_v)
        {
            best_v = v;
            best = idx;
        }
    }
    return best;
}

arma::cx_vec risfb::hop_codeword(const HopCodebook &cb, int i_l, int i_n)
{
    if (i_n < 1 || i_n > int(cb.rvq.n_cols))
        throw IndexOutOfRange("NLoS codeword index out of range");
    const arma::uword l = cb.rvq.n_rows + 1;
    arma::cx_vec w(l);
    w[0] = cb.w_los() * phase_codeword(i_l, cb.phase_bits);
    w.subvec(1, l - 1) = cb.w_nlos() * cb.rvq.col(i_n - 1);
    return w;
}

risfb::HopQuantization risfb::quantize_hop(const arma::cx_vec &g, const HopCodebook &cb)
{
    if (g.n_elem != cb.rvq.n_rows + 1)
        throw ShapeMismatch("gain vector length does not match the hop codebook");

    const double gn = arma::norm(g);
    arma::cx_vec gt = gn > 0.0 ? arma::cx_vec(g / gn) : g;
    arma::cx_vec gt_n = gt.subvec(1, g.n_elem - 1);

    HopQuantization out;
    const double nn = arma::norm(gt_n);
    out.i_n = nn > 0.0 ? quantize_nlos(gt_n / nn, cb.rvq) : 1;
    const cx nlos_inner = arma::cdot(gt_n, cb.rvq.col(out.i_n - 1));
    out.i_l = quantize_los_phase(gt[0], nlos_inner, cb.w_los(), cb.w_nlos(), cb.phase_bits);
    out.w = hop_codeword(cb, out.i_l, out.i_n);
    return out;
}

risfb::CascadedCodebook risfb::make_codebook(const BitAllocation &alloc, double k_b, double k_m, int l_b, int l_m,
                                             std::uint64_t seed)
{
    if (l_b < 3 || l_m < 3)
        throw InvalidPathCount("path count must be ≥ 3");
    if (alloc.b_bl < 0 || alloc.b_bn < 0 || alloc.b_ml < 0 || alloc.b_mn < 0)
        throw IndexOutOfRange("bit allocation components must be ≥ 0");
    check_bits(alloc.b_bl, 1);
    check_bits(alloc.b_ml, 1);
    if (alloc.total() > 62)
        throw BudgetTooLarge("total feedback budget above 62 bits");

    CascadedCodebook cb;
    cb.alloc = alloc;
    cb.seed = seed;
    cb.bs.phase_bits = alloc.b_bl;
    cb.bs.k = k_b;
    cb.bs.rvq = generate_rvq(l_b - 1, alloc.b_bn, derive_seed(seed, 1));
    cb.ms.phase_bits = alloc.b_ml;
    cb.ms.k = k_m;
    cb.ms.rvq = generate_rvq(l_m - 1, alloc.b_mn, derive_seed(seed, 2));
    return cb;
}

std::uint64_t risfb::compose_index(int i_bl, int i_bn, int i_ml, int i_mn, const BitAllocation &alloc)
{
    const std::uint64_t i_b = std::uint64_t(i_bl) + (std::uint64_t(i_bn - 1) << alloc.b_bl);
    const std::uint64_t i_m = std::uint64_t(i_ml) + (std::uint64_t(i_mn - 1) << alloc.b_ml);
    return i_m + ((i_b - 1) << alloc.b_m());
}

std::array<int, 4> risfb::decompose_index(std::uint64_t i, const BitAllocation &alloc)
{
    if (i < 1 || (alloc.total() < 64 && i > (std::uint64_t(1) << alloc.total())))
        throw IndexOutOfRange("composite index out of range");
    const std::uint64_t z = i - 1;
    const std::uint64_t zm = z & ((std::uint64_t(1) << alloc.b_m()) - 1);
    const std::uint64_t zb = z >> alloc.b_m();
    const auto lo = [](std::uint64_t v, int bits) { return int(v & ((std::uint64_t(1) << bits) - 1)); };
    return {lo(zb, alloc.b_bl) + 1, int(zb >> alloc.b_bl) + 1, lo(zm, alloc.b_ml) + 1, int(zm >> alloc.b_ml) + 1};
}

risfb::QuantizationResult risfb::quantize_channel(const ChannelEnvironment &env, const CascadedCodebook &cb)
{
    const HopQuantization qb = quantize_hop(arma::conj(env.g_b), cb.bs);
    const HopQuantization qm = quantize_hop(arma::conj(env.g_m), cb.ms);

    QuantizationResult r;
    r.i_bl = qb.i_l;
    r.i_bn = qb.i_n;
    r.i_ml = qm.i_l;
    r.i_mn = qm.i_n;
    r.i_b = std::uint64_t(r.i_bl) + (std::uint64_t(r.i_bn - 1) << cb.alloc.b_bl);
    r.i_m = std::uint64_t(r.i_ml) + (std::uint64_t(r.i_mn - 1) << cb.alloc.b_ml);
    r.i = compose_index(r.i_bl, r.i_bn, r.i_ml, r.i_mn, cb.alloc);
    r.w = arma::kron(qb.w, qm.w);
    r.gain_norm = arma::norm(env.g_b) * arma::norm(env.g_m);
    return r;
}

std::string risfb::encode_feedback(const QuantizationResult &q, const BitAllocation &alloc)
{
    const int b = alloc.total();
    const std::uint64_t z = q.i - 1;
    std::string s(b, '0');
    for (int k = 0; k < b; ++k)
        if ((z >> (b - 1 - k)) & 1u)
            s[k] = '1';
    return s;
}

std::array<int, 4> risfb::decode_feedback(const std::string &bits, const BitAllocation &alloc)
{
    if (int(bits.size()) != alloc.total())
        throw ShapeMismatch("feedback word length differs from the bit budget");
    std::uint64_t z = 0;
    for (char c : bits)
    {
        if (c != '0' && c != '1')
            throw ShapeMismatch("feedback word must contain only 0 and 1");
        z = (z << 1) | std::uint64_t(c == '1');
    }
    return decompose_index(z + 1, alloc);
}

arma::cx_vec risfb::reconstruct_channel(const QuantizationResult &q, const arma::cx_mat &A, double q1)
{
    if (A.n_cols != q.w.n_elem)
        throw ShapeMismatch("A columns and codeword length differ");
    return (q1 * q.gain_norm) * (A * q.w);
}

risfb::NaiveCodebook risfb::make_naive_codebook(int b, int l_b, int l_m, std::uint64_t seed)
{
    if (b < 0)
        throw IndexOutOfRange("bit budget must be ≥ 0");
    NaiveCodebook cb;
    cb.bits_b = b / 2;
    cb.bits_m = b - b / 2;
    cb.bs = generate_rvq(l_b, cb.bits_b, derive_seed(seed, 3));
    cb.ms = generate_rvq(l_m, cb.bits_m, derive_seed(seed, 4));
    return cb;
}

risfb::QuantizationResult risfb::quantize_naive(const ChannelEnvironment &env, const NaiveCodebook &cb)
{
    const arma::cx_vec gb = arma::conj(env.g_b), gm = arma::conj(env.g_m);
    const double nb = arma::norm(gb), nm = arma::norm(gm);

    QuantizationResult r;
    r.i_bn = nb > 0.0 ? quantize_nlos(gb / nb, cb.bs) : 1;
    r.i_mn = nm > 0.0 ? quantize_nlos(gm / nm, cb.ms) : 1;
    r.i_b = std::uint64_t(r.i_bn);
    r.i_m = std::uint64_t(r.i_mn);
    r.i = r.i_m + ((r.i_b - 1) << cb.bits_m);
    r.w = arma::kron(cb.bs.col(r.i_bn - 1), cb.ms.col(r.i_mn - 1));
    r.gain_norm = nb * nm;
    return r;
}
