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
#ifndef RISAOI_SIM_HPP
#define RISAOI_SIM_HPP

#include "risaoi/aoi.hpp"
#include "risaoi/baselines.hpp"
#include "risaoi/channel.hpp"
#include "risaoi/config.hpp"
#include "risaoi/phy.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace risaoi::sim
{

struct StreamRecord
{
    int A = 0;
    int z = 0;
    int eta = 0;
    int a = 0;
    int success = 0;
    double snr = 0.0; // linear, 0 when not served
};

struct SlotRecord
{
    int slot = 0; // 1-based
    std::vector<StreamRecord> streams;
    double power = 0.0;         // total transmit power of the decision
    double unit_modulus = 0.0;  // max | |psi_n| - 1 | over both faces
    bool fallback = false;      // policy raised; the all-zero schedule was used
};

struct Trajectory
{
    std::uint64_t seed = 0;
    PolicyKind policy = PolicyKind::Proposed;
    std::vector<SlotRecord> slots;
    long sum_aoi = 0;
    int fallbacks = 0;
};

/// Everything a policy sees in one slot.
struct SlotContext
{
    const SystemConfig &cfg;
    const RVector &weights;
    const ChannelRealization &channels;
    const RelayChannels &relay;
    const aoi::NetworkState &state;
    Rng &rng;
};

using DecideFn = std::function<SlotDecision(const SlotContext &)>;

/// Decision function of a built-in policy.
DecideFn policy_fn(PolicyKind kind);

/// T slots of arrivals, availability, channels, decision, success and age
/// update. Deterministic in (cfg, policy, seed) as long as no slot hits the
/// wall-clock guard.
Trajectory run_episode(const SystemConfig &cfg, PolicyKind policy, std::uint64_t seed);
Trajectory run_episode(const SystemConfig &cfg, const DecideFn &decide, std::uint64_t seed,
                       PolicyKind tag = PolicyKind::Proposed);

struct SweepRow
{
    PolicyKind policy = PolicyKind::Proposed;
    double axis_value = 0.0;
    double mean_sum_aoi = 0.0;
    double ci95 = 0.0; // Student-t half-width
    int n_seeds = 0;
    std::vector<long> sums; // per seed, in seed order
};

struct SweepResult
{
    std::string axis;
    std::vector<double> values;
    std::vector<SweepRow> rows; // sorted by axis value, then policy order
};

struct EpisodeKey
{
    PolicyKind policy;
    double axis_value;
    std::uint64_t seed;
};

/// Called once per finished episode, serialized by the sweep.
using EpisodeSink = std::function<void(const EpisodeKey &, const Trajectory &)>;

/// All (policy, value, seed) combinations on a pool of `jobs` workers
/// (0 = hardware concurrency).
SweepResult run_sweep(const SystemConfig &cfg, const std::vector<PolicyKind> &policies, const std::string &axis,
                      const std::vector<double> &values, const std::vector<std::uint64_t> &seeds, int jobs = 0,
                      const EpisodeSink &sink = {});

/// Mean and 95% Student-t half-width of a sample (half-width 0 for n < 2).
std::pair<double, double> mean_ci95(const std::vector<long> &x);

/// Sum of A over all slots and streams of a trajectory.
long recount_sum_aoi(const Trajectory &t);

} // namespace risaoi::sim

#endif
