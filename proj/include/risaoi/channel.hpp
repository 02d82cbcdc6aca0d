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

#ifndef RISAOI_CHANNEL_HPP
#define RISAOI_CHANNEL_HPP

#include "risaoi/config.hpp"
#include "risaoi/numerics.hpp"
#include "risaoi/rng.hpp"

#include <vector>

namespace risaoi
{

/// One slot's channels. G: AP -> front RIS face (N_s x M); h_F[j], h_B[k]:
/// RIS faces -> users; g_f: front face -> front horn; g_b: back horn -> back face.
struct ChannelRealization
{
    CMatrix G;
    std::vector<CVector> h_F;
    std::vector<CVector> h_B;
    CVector g_f;
    CVector g_b;
};

/// Line-of-sight parts, fixed for an episode.
using LosComponents = ChannelRealization;

/// Single-antenna relay links of the full-duplex AF baseline.
struct RelayChannels
{
    CVector h_ar;             // AP -> relay, length M
    std::vector<cplx> h_ru;   // relay -> user, one per stream (front first)
};

/// pl_ref * d^-alpha. Throws NonPositiveDistance for d <= 0.
double path_loss_lin(double d, double alpha, double pl_ref);

/// Half-wavelength uniform linear array response exp(j pi n sin theta).
CVector steering_vector(int n, double theta);

/// sqrt(beta) (sqrt(K/(K+1)) los + sqrt(1/(K+1)) W), W i.i.d. CN(0, 1).
CMatrix rician_matrix(int rows, int cols, double k_factor, double beta, const CMatrix &los, Rng &rng);

/// LoS components from uniform angles in [0, 2 pi).
LosComponents draw_los(const SystemConfig &cfg, Rng &rng);

ChannelRealization draw_channels(const SystemConfig &cfg, const LosComponents &los, Rng &rng);

/// Convenience overload drawing fresh LoS angles from the same stream first.
ChannelRealization draw_channels(const SystemConfig &cfg, Rng &rng);

/// LoS parts of the relay links (unit-modulus entries), fixed for an episode.
RelayChannels draw_relay_los(const SystemConfig &cfg, Rng &rng);

RelayChannels draw_relay_channels(const SystemConfig &cfg, const RelayChannels &los, Rng &rng);

} // namespace risaoi

#endif
