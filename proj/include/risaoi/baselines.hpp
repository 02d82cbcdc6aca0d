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
#ifndef RISAOI_BASELINES_HPP
#define RISAOI_BASELINES_HPP

#include "risaoi/channel.hpp"
#include "risaoi/config.hpp"
#include "risaoi/phy.hpp"
#include "risaoi/rng.hpp"

#include <string>
#include <vector>

namespace risaoi
{

enum class PolicyKind
{
    Proposed,
    FdAfRelay,
    RandomPhase,
    RandomBeamforming,
};

/// "proposed", "fd-af", "rps", "rbf".
std::string to_string(PolicyKind k);
/// Inverse of to_string; throws Error on an unknown name.
PolicyKind parse_policy(const std::string &name);
const std::vector<PolicyKind> &all_policies();

namespace baselines
{

/// SNR of one stream over the full-duplex AF relay with beamformer w:
/// chi |h_ru|^2 |h_ar^H w|^2 / (chi |h_ru|^2 sigma2_o + sigma2_u).
double relay_snr(const RelayChannels &rc, const CVector &w, int stream, const SystemConfig &cfg);

/// Matched filter toward h_ar, equal power over the scheduled streams,
/// greedy top-E by weight keeping a stream only if the whole set stays
/// feasible. Phases are reported as all ones (no surface involved).
SlotDecision fd_af_relay_decide(const RVector &weights, const RelayChannels &rc, const SystemConfig &cfg, Rng &rng);

/// Uniform random phases on both faces, then the active subproblem.
SlotDecision random_phase_decide(const RVector &weights, const ChannelRealization &ch, const SystemConfig &cfg,
                                 Rng &rng);

/// Isotropic random beamformer directions with P0 split equally over the
/// available streams, then the phase subproblem.
SlotDecision random_beamforming_decide(const RVector &weights, const ChannelRealization &ch, const SystemConfig &cfg,
                                       Rng &rng);

} // namespace baselines
} // namespace risaoi

#endif
