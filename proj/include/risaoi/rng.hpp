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

#ifndef RISAOI_RNG_HPP
#define RISAOI_RNG_HPP

#include <cstdint>
#include <random>

namespace risaoi
{

using Rng = std::mt19937_64;

/// Independent random streams of an episode.
enum class Stream : std::uint64_t
{
    Geometry = 1,
    Channel = 2,
    Arrivals = 3,
    Policy = 4,
    Relay = 5,
};

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed of stream `s` at index `i` (usually the slot) of episode `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, Stream s, std::uint64_t i = 0)
{
    return splitmix64(splitmix64(splitmix64(seed) ^ static_cast<std::uint64_t>(s)) + i);
}

inline Rng make_rng(std::uint64_t seed, Stream s, std::uint64_t i = 0)
{
    return Rng(derive_seed(seed, s, i));
}

} // namespace risaoi

#endif
