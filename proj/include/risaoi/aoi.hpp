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

#ifndef RISAOI_AOI_HPP
#define RISAOI_AOI_HPP

#include "risaoi/config.hpp"
#include "risaoi/numerics.hpp"
#include "risaoi/rng.hpp"

#include <vector>

namespace risaoi::aoi
{

struct StreamState
{
    int z = 0;   // system time of the queued packet
    int eta = 0; // 1 when an undelivered packet is waiting
    int A = 1;   // instantaneous age
    int p = 0;   // arrival in the current slot
};

/// Front streams first, then back streams; `last_a` / `last_success` use the
/// same global stream index.
struct NetworkState
{
    std::vector<StreamState> front;
    std::vector<StreamState> back;
    std::vector<int> last_a;
    std::vector<int> last_success;

    int streams() const noexcept { return static_cast<int>(front.size() + back.size()); }
    StreamState &stream(int i) { return i < static_cast<int>(front.size()) ? front[i] : back[i - front.size()]; }
    const StreamState &stream(int i) const
    {
        return i < static_cast<int>(front.size()) ? front[i] : back[i - front.size()];
    }
};

NetworkState initial_state(int J, int K);
inline NetworkState initial_state(const SystemConfig &cfg) { return initial_state(cfg.J, cfg.K); }

/// Independent Bernoulli(p_arr) arrival flag per stream.
void draw_arrivals(NetworkState &state, double p_arr, Rng &rng);

/// 0 on a fresh arrival, z + 1 otherwise.
int step_system_time(const StreamState &s);

/// p + eta (1 - a_prev)(1 - p), clamped to {0, 1}.
int step_availability(const StreamState &s, int a_prev);

/// z + 1 after a delivery (scheduled, packet present and decoded), A + 1 otherwise.
int step_aoi(const StreamState &s, int a_prev, int eta_prev, int success_prev);

/// (A - z) eta per stream.
RVector reduction_weights(const NetworkState &state);

/// Start of a slot once arrival flags are set: refresh z and eta.
void begin_slot(NetworkState &state);

/// End of a slot: age update from the decision and its outcome; remembers
/// a and success for the next slot.
void end_slot(NetworkState &state, const std::vector<int> &a, const std::vector<int> &success);

/// Sum of instantaneous ages over all streams.
long sum_age(const NetworkState &state);

} // namespace risaoi::aoi

#endif
