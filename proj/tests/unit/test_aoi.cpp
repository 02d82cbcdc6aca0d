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
#include "risaoi/oracle.hpp"

#include <catch_amalgamated.hpp>

using namespace risaoi;

TEST_CASE("arrival draws", "[aoi]")
{
    auto st = aoi::initial_state(2, 3);
    Rng rng(1);
    aoi::draw_arrivals(st, 1.0, rng);
    for (int i = 0; i < st.streams(); ++i)
        CHECK(st.stream(i).p == 1);
    aoi::draw_arrivals(st, 0.0, rng);
    for (int i = 0; i < st.streams(); ++i)
        CHECK(st.stream(i).p == 0);

    long hits = 0, total = 0;
    for (int r = 0; r < 2000; ++r)
    {
        aoi::draw_arrivals(st, 0.5, rng);
        for (int i = 0; i < st.streams(); ++i, ++total)
            hits += st.stream(i).p;
    }
    const double mean = static_cast<double>(hits) / static_cast<double>(total);
    CHECK(mean >= 0.47);
    CHECK(mean <= 0.53);
}

TEST_CASE("system time recursion", "[aoi]")
{
    CHECK(aoi::step_system_time({5, 0, 1, 1}) == 0);
    CHECK(aoi::step_system_time({5, 0, 1, 0}) == 6);
    CHECK(aoi::step_system_time({0, 0, 1, 0}) == 1);
}

TEST_CASE("availability recursion", "[aoi]")
{
    for (int eta : {0, 1})
        for (int a : {0, 1})
            CHECK(aoi::step_availability({0, eta, 1, 1}, a) == 1);
    CHECK(aoi::step_availability({3, 1, 1, 0}, 0) == 1);
    CHECK(aoi::step_availability({3, 1, 1, 0}, 1) == 0);
    CHECK(aoi::step_availability({3, 0, 1, 0}, 0) == 0);
}

TEST_CASE("age recursion", "[aoi]")
{
    const aoi::StreamState s{2, 1, 9, 0};
    CHECK(aoi::step_aoi(s, 1, 1, 1) == 3);
    CHECK(aoi::step_aoi(s, 1, 1, 0) == 10);
    CHECK(aoi::step_aoi(s, 0, 1, 1) == 10);
    CHECK(aoi::step_aoi(s, 1, 0, 1) == 10);
}

TEST_CASE("reduction weights", "[aoi]")
{
    auto st = aoi::initial_state(1, 2);
    st.front[0] = {2, 1, 7, 0};
    st.back[0] = {2, 0, 7, 0};
    st.back[1] = {0, 1, 4, 1};
    const RVector w = aoi::reduction_weights(st);
    CHECK(w(0) == 5.0);
    CHECK(w(1) == 0.0);
    CHECK(w(2) == 4.0);
}

TEST_CASE("idle stream ages linearly", "[aoi]")
{
    auto st = aoi::initial_state(1, 0);
    long sum = 0;
    for (int t = 0; t < 3; ++t)
    {
        aoi::begin_slot(st);
        aoi::end_slot(st, {0}, {0});
        sum += aoi::sum_age(st);
    }
    CHECK(st.front[0].A == 4);
    CHECK(sum == 9);
}

TEST_CASE("state machine matches packet timestamps on every length-6 sequence", "[aoi][oracle]")
{
    // Oracle: the age after slot t is t + 1 - g, g the generation time of the
    // freshest delivered packet (g = 0 initially). A scheduled packet leaves
    // the queue whether or not it is decoded.
    const int T = 6;
    long cases = 0, mismatches = 0;
    for (long mask = 0; mask < (1L << (3 * T)); ++mask, ++cases)
    {
        auto st = aoi::initial_state(0, 1);
        int queued_gen = -1, delivered_gen = 0, prev_a = 0;
        bool ok = true;
        for (int t = 1; t <= T; ++t)
        {
            const int p = (mask >> (3 * t - 3)) & 1, a = (mask >> (3 * t - 2)) & 1, s = (mask >> (3 * t - 1)) & 1;
            st.back[0].p = p;
            aoi::begin_slot(st);
            aoi::end_slot(st, {a}, {s});

            if (p)
                queued_gen = t;
            else if (prev_a)
                queued_gen = -1;
            if (a && s && queued_gen >= 0)
                delivered_gen = queued_gen;
            prev_a = a;

            const auto &x = st.back[0];
            ok = ok && x.A == t + 1 - delivered_gen && x.eta == (queued_gen >= 0);
            if (queued_gen >= 0)
                ok = ok && x.z == t - queued_gen;
        }
        mismatches += ok ? 0 : 1;
    }
    CHECK(cases == 262144);
    CHECK(mismatches == 0);
}

TEST_CASE("library enumeration check agrees", "[aoi][oracle]")
{
    const auto r = oracle::aoi_enumeration(6);
    CHECK(r.cases == (1L << 18));
    CHECK(r.pass);
}
