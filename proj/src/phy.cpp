// SPDX-License-Identifier: Apache-2.0
//
// ris-aoi: sum-AoI scheduling over a relay-aided double-sided RIS
// Copyright (C) 2026 The ris-aoi authors
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
// ------------------------------------------------------------------------

#include "risaoi/phy.hpp"
#include "risaoi/errors.hpp"

#include <string>

namespace risaoi::phy
{
namespace
{

void check_dims(const ChannelRealization &ch, const CVector &psi, const CVector *w, const char *who)
{
    const auto n = ch.G.rows();
    if (psi.size() != n)
        throw DimensionMismatch(std::string(who) + ": phase vector has length " + std::to_string(psi.size()) +
                                ", expected " + std::to_string(n));
    if (w && w->size() != ch.G.cols())
        throw DimensionMismatch(std::string(who) + ": beamformer has length " + std::to_string(w->size()) +
                                ", expected " + std::to_string(ch.G.cols()));
}

const CVector &user(const std::vector<CVector> &hs, int idx, const char *who)
{
    if (idx < 0 || idx >= static_cast<int>(hs.size()))
        throw DimensionMismatch(std::string(who) + ": user index out of range");
    return hs[idx];
}

CMatrix reflection(const CVector &psi) { return psi.conjugate().asDiagonal(); }

} // namespace

double snr_front(const ChannelRealization &ch, const CVector &psi_f, const CVector &w, int j, double sigma2_F)
{
    check_dims(ch, psi_f, &w, "snr_front");
    const CVector &h = user(ch.h_F, j, "snr_front");
    const cplx y = h.adjoint() * reflection(psi_f) * ch.G * w;
    return std::norm(y) / sigma2_F;
}

double detail::snr_back_formula(const ChannelRealization &ch, const CVector &psi_f, const CVector &psi_b,
                                const CVector &w, int k, double chi, double sigma2_o, double sigma2_B,
                                double relay_noise_sign)
{
    check_dims(ch, psi_f, &w, "snr_back");
    check_dims(ch, psi_b, nullptr, "snr_back");
    const CVector &h = user(ch.h_B, k, "snr_back");
    const cplx back = h.adjoint() * reflection(psi_b) * ch.g_b;
    const cplx front = ch.g_f.adjoint() * reflection(psi_f) * ch.G * w;
    return chi * std::norm(back * front) / (relay_noise_sign * chi * std::norm(back) * sigma2_o + sigma2_B);
}

double snr_back(const ChannelRealization &ch, const CVector &psi_f, const CVector &psi_b, const CVector &w, int k,
                double chi, double sigma2_o, double sigma2_B)
{
    return detail::snr_back_formula(ch, psi_f, psi_b, w, k, chi, sigma2_o, sigma2_B, 1.0);
}

CVector cascaded_front(const ChannelRealization &ch, const CVector &psi_f, int j)
{
    check_dims(ch, psi_f, nullptr, "cascaded_front");
    const CVector &h = user(ch.h_F, j, "cascaded_front");
    // hbar = G^H diag(h) psi
    return ch.G.adjoint() * h.cwiseProduct(psi_f);
}

cplx relay_link(const ChannelRealization &ch, const CVector &psi_b, int k)
{
    check_dims(ch, psi_b, nullptr, "relay_link");
    const CVector &h = user(ch.h_B, k, "relay_link");
    // psi_b^H diag(h^H) g_b
    return psi_b.dot(h.conjugate().cwiseProduct(ch.g_b));
}

CVector cascaded_back(const ChannelRealization &ch, const CVector &psi_f, const CVector &psi_b, int k)
{
    check_dims(ch, psi_f, nullptr, "cascaded_back");
    const cplx r = relay_link(ch, psi_b, k);
    // hbar^H = r psi_f^H diag(g_f^H) G
    const Eigen::RowVectorXcd row = r * (psi_f.adjoint() * ch.g_f.conjugate().asDiagonal() * ch.G);
    return row.adjoint();
}

double snr_front_cascaded(const CVector &hbar, const CVector &w, double sigma2_F)
{
    return std::norm(hbar.dot(w)) / sigma2_F;
}

double snr_back_cascaded(const CVector &hbar, cplx relay, const CVector &w, double chi, double sigma2_o,
                         double sigma2_B)
{
    return chi * std::norm(hbar.dot(w)) / (chi * std::norm(relay) * sigma2_o + sigma2_B);
}

CVector front_trace_vector(const ChannelRealization &ch, const CVector &w, int j)
{
    const CVector &h = user(ch.h_F, j, "front_trace_vector");
    return h.conjugate().cwiseProduct(ch.G * w);
}

CVector back_relay_vector(const ChannelRealization &ch, int k)
{
    const CVector &h = user(ch.h_B, k, "back_relay_vector");
    return h.conjugate().cwiseProduct(ch.g_b);
}

CVector back_front_vector(const ChannelRealization &ch, const CVector &w)
{
    return ch.g_f.conjugate().cwiseProduct(ch.G * w);
}

RVector all_snrs(const ChannelRealization &ch, const SystemConfig &cfg, const PhaseConfig &ph,
                 const std::vector<CVector> &w)
{
    if (static_cast<int>(w.size()) != cfg.streams())
        throw DimensionMismatch("all_snrs: one beamformer per stream expected");
    RVector s(cfg.streams());
    for (int u = 0; u < cfg.streams(); ++u)
        s(u) = cfg.is_front(u) ? snr_front(ch, ph.psi_f, w[u], u, cfg.sigma2_F)
                               : snr_back(ch, ph.psi_f, ph.psi_b, w[u], u - cfg.J, cfg.chi, cfg.sigma2_o,
                                          cfg.sigma2_B);
    return s;
}

int success_check(double snr, double gamma_th) { return snr >= gamma_th ? 1 : 0; }

double total_power(const std::vector<CVector> &w)
{
    double p = 0.0;
    for (const auto &v : w)
        p += v.squaredNorm();
    return p;
}

} // namespace risaoi::phy
