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

#include "risaoi/aoi.hpp"
#include "risaoi/errors.hpp"

#include <algorithm>

namespace risaoi::aoi
{

NetworkState initial_state(int J, int K)
{
    NetworkState s;
    s.front.assign(J, StreamState{});
    s.back.assign(K, StreamState{});
    s.last_a.assign(J + K, 0);
    s.last_success.assign(J + K, 0);
    return s;
}

void draw_arrivals(NetworkState &state, double p_arr, Rng &rng)
{
    std::bernoulli_distribution b(std::clamp(p_arr, 0.0, 1.0));
    for (int i = 0; i < state.streams(); ++i)
        state.stream(i).p = b(rng) ? 1 : 0;
}

int step_system_time(const StreamState &s) { return s.p ? 0 : s.z + 1; }

int step_availability(const StreamState &s, int a_prev)
{
    const int v = s.p + s.eta * (1 - a_prev) * (1 - s.p);
    return std::clamp(v, 0, 1);
}

int step_aoi(const StreamState &s, int a_prev, int eta_prev, int success_prev)
{
    return (a_prev * eta_prev == 1 && success_prev == 1) ? s.z + 1 : s.A + 1;
}

RVector reduction_weights(const NetworkState &state)
{
    RVector w(state.streams());
    for (int i = 0; i < state.streams(); ++i)
    {
        const auto &s = state.stream(i);
        w(i) = s.eta ? static_cast<double>(s.A - s.z) : 0.0;
    }
    return w;
}

void begin_slot(NetworkState &state)
{
    for (int i = 0; i < state.streams(); ++i)
    {
        auto &s = state.stream(i);
        const int eta = step_availability(s, state.last_a[i]);
        s.z = step_system_time(s);
        s.eta = eta;
    }
}

void end_slot(NetworkState &state, const std::vector<int> &a, const std::vector<int> &success)
{
    if (static_cast<int>(a.size()) != state.streams() || static_cast<int>(success.size()) != state.streams())
        throw DimensionMismatch("end_slot: decision length does not match the stream count");
    for (int i = 0; i < state.streams(); ++i)
    {
        auto &s = state.stream(i);
        const int ok = (a[i] && s.eta && success[i]) ? 1 : 0;
        s.A = step_aoi(s, a[i], s.eta, ok);
        state.last_a[i] = a[i] ? 1 : 0;
        state.last_success[i] = ok;
    }
}

long sum_age(const NetworkState &state)
{
    long total = 0;
    for (int i = 0; i < state.streams(); ++i)
        total += state.stream(i).A;
    return total;
}

} // namespace risaoi::aoi
