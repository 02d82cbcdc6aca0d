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

#ifndef RISAOI_PHY_HPP
#define RISAOI_PHY_HPP

#include "risaoi/channel.hpp"
#include "risaoi/config.hpp"
#include "risaoi/numerics.hpp"

#include <vector>

namespace risaoi
{

/// Phase vectors of both RIS faces. The reflection matrix of a face is
/// diag(conj(psi)), so that h^H Phi x = psi^H diag(h^H) x.
struct PhaseConfig
{
    CVector psi_f;
    CVector psi_b;
};

/// One decision per slot. Vectors are indexed by stream (front first).
struct SlotDecision
{
    std::vector<int> a;
    std::vector<CVector> w;
    PhaseConfig phases;
    RVector snrs;
    double objective = 0.0; // sum of weights over scheduled streams
};

namespace phy
{

/// |h^H Phi_f G w|^2 / sigma2 with explicit reflection matrices.
double snr_front(const ChannelRealization &ch, const CVector &psi_f, const CVector &w, int j, double sigma2_F);

/// chi |h^H Phi_b g_b g_f^H Phi_f G w|^2 / (chi |h^H Phi_b g_b|^2 sigma2_o + sigma2_B).
double snr_back(const ChannelRealization &ch, const CVector &psi_f, const CVector &psi_b, const CVector &w, int k,
                double chi, double sigma2_o, double sigma2_B);

/// Equivalent channel hbar with |hbar^H w|^2 the front-user received power.
CVector cascaded_front(const ChannelRealization &ch, const CVector &psi_f, int j);

/// Equivalent channel hbar with |hbar^H w|^2 the back-user signal power
/// before the chi gain.
CVector cascaded_back(const ChannelRealization &ch, const CVector &psi_f, const CVector &psi_b, int k);

/// Relay hop h_B^H Phi_b g_b of a back user.
cplx relay_link(const ChannelRealization &ch, const CVector &psi_b, int k);

/// Same SNRs evaluated through the cascaded channels.
double snr_front_cascaded(const CVector &hbar, const CVector &w, double sigma2_F);
double snr_back_cascaded(const CVector &hbar, cplx relay, const CVector &w, double chi, double sigma2_o,
                         double sigma2_B);

/// Rank-one building blocks of the trace forms. With Psi = psi psi^H:
///   |hbar_j^H w|^2 = Tr(Psi_f d d^H),        d = diag(h_j^H) G w
///   |relay_k|^2    = Tr(Psi_b v v^H),        v = diag(h_k^H) g_b
///   |psi_f^H u|^2  = Tr(Psi_f u u^H),        u = diag(g_f^H) G w
CVector front_trace_vector(const ChannelRealization &ch, const CVector &w, int j);
CVector back_relay_vector(const ChannelRealization &ch, int k);
CVector back_front_vector(const ChannelRealization &ch, const CVector &w);

/// SNR of every stream (front first).
RVector all_snrs(const ChannelRealization &ch, const SystemConfig &cfg, const PhaseConfig &ph,
                 const std::vector<CVector> &w);

/// 1 iff snr >= gamma_th.
int success_check(double snr, double gamma_th);

/// Total transmit power of the beamformers.
double total_power(const std::vector<CVector> &w);

namespace detail
{
/// Back-user SNR with the relay-noise term multiplied by `relay_noise_sign`
/// (+1 in the model; -1 only to exercise the oracle mutation canary).
double snr_back_formula(const ChannelRealization &ch, const CVector &psi_f, const CVector &psi_b,
                        const CVector &w, int k, double chi, double sigma2_o, double sigma2_B,
                        double relay_noise_sign);
} // namespace detail

} // namespace phy
} // namespace risaoi

#endif
