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
#ifndef RISAOI_ORACLE_HPP
#define RISAOI_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace risaoi::oracle
{

enum class Mutation
{
    None,
    SnrDenominator, // flips the sign of the relay-noise term in the back-user SNR
};

/// "none" or "snr-denominator"; throws Error otherwise.
Mutation parse_mutation(const std::string &name);

struct CheckResult
{
    std::string name;
    bool pass = false;
    long cases = 0;
    long mismatches = 0;
    std::string detail;
    double seconds = 0.0;
};

struct Options
{
    std::uint64_t seed = 1;
    int instances = 1000;
    int aoi_horizon = 6;
    Mutation mutation = Mutation::None;
};

/// Single stream, every (arrival, schedule, decode) bit sequence of length T:
/// the state machine against a packet-timestamp model.
CheckResult aoi_enumeration(int T);

/// Small instances (J + K <= 4, N_s <= 2): the fractional schedule against
/// vertex enumeration, and the rounded schedule for feasibility and maximality.
CheckResult schedule_exhaustive(int instances, std::uint64_t seed);

/// Explicit reflection-matrix SNRs against the cascaded-channel forms.
CheckResult snr_duality(int instances, std::uint64_t seed, Mutation m = Mutation::None);

/// Tightness at the expansion point and the upper-bound property of both DC
/// constructions on random perturbations.
CheckResult dc_bounds(int instances, std::uint64_t seed);

std::vector<CheckResult> run_all(const Options &opts);

} // namespace risaoi::oracle

#endif
