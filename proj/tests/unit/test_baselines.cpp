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

#include "risaoi/baselines.hpp"
#include "risaoi/channel.hpp"
#include "risaoi/errors.hpp"
#include "risaoi/sca.hpp"
#include "risaoi/sim.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numeric>

using namespace risaoi;
using Catch::Matchers::WithinRel;

namespace
{

RelayChannels unit_relay(int M, int U)
{
    RelayChannels rc;
    rc.h_ar = CVector::Zero(M);
    rc.h_ar(0) = 1.0;
    rc.h_ru.assign(U, cplx(1.0, 0.0));
    return rc;
}

} // namespace

TEST_CASE("policy names", "[baselines]")
{
    for (auto k : all_policies())
        CHECK(parse_policy(to_string(k)) == k);
    CHECK(to_string(PolicyKind::FdAfRelay) == "fd-af");
    CHECK_THROWS_AS(parse_policy("oracle"), Error);
}

TEST_CASE("relay SNR matches the scalar cascade", "[baselines]")
{
    SystemConfig cfg;
    cfg.M = 1;
    cfg.chi = 40.0;
    cfg.sigma2_o = 0.1;
    cfg.sigma2_F = 0.3;
    cfg.sigma2_B = 0.6;
    const RelayChannels rc = unit_relay(1, 4);
    const double P = 2.0;
    const CVector w = CVector::Constant(1, std::sqrt(P));
    CHECK_THAT(baselines::relay_snr(rc, w, 0, cfg), WithinRel(40.0 * P / (40.0 * 0.1 + 0.3), 1e-14));
    CHECK_THAT(baselines::relay_snr(rc, w, 3, cfg), WithinRel(40.0 * P / (40.0 * 0.1 + 0.6), 1e-14));
}

TEST_CASE("FD-AF scheduling", "[baselines]")
{
    SystemConfig cfg;
    cfg.J = 2;
    cfg.K = 0;
    cfg.M = 2;
    cfg.E = 1;
    cfg.N_s = 3;
    cfg.P0 = 1.0;
    cfg.chi = 10.0;
    cfg.sigma2_o = 1e-3;
    cfg.sigma2_F = 1e-3;
    cfg.gamma_th = 10.0;
    RelayChannels rc = unit_relay(2, 2);
    Rng rng(1);
    RVector w(2);
    w << 5.0, 2.0;
    auto d = baselines::fd_af_relay_decide(w, rc, cfg, rng);
    CHECK(d.a == std::vector<int>{1, 0});
    CHECK(d.objective == 5.0);
    CHECK_THAT(phy::total_power(d.w), WithinRel(cfg.P0, 1e-12));

    // dead relay -> user link
    rc.h_ru[0] = 0.0;
    d = baselines::fd_af_relay_decide(w, rc, cfg, rng);
    CHECK(d.a == std::vector<int>{0, 1});

    cfg.P0 = 0.0;
    d = baselines::fd_af_relay_decide(w, unit_relay(2, 2), cfg, rng);
    CHECK(d.a == std::vector<int>{0, 0});

    d = baselines::fd_af_relay_decide(RVector::Zero(2), unit_relay(2, 2), cfg, rng);
    CHECK(d.a == std::vector<int>{0, 0});
}

TEST_CASE("random-phase and random-beamforming decisions", "[baselines]")
{
    SystemConfig cfg = preset("fig3a");
    cfg.N_s = 4;
    Rng rng(3);
    const auto ch = draw_channels(cfg, rng);
    RVector w(4);
    w << 3.0, 1.0, 4.0, 2.0;

    for (int rep = 0; rep < 5; ++rep)
    {
        for (const auto &d : {baselines::random_phase_decide(w, ch, cfg, rng),
                              baselines::random_beamforming_decide(w, ch, cfg, rng)})
        {
            CHECK(phy::total_power(d.w) <= cfg.P0 * (1.0 + 1e-9));
            CHECK(std::accumulate(d.a.begin(), d.a.end(), 0) <= cfg.E);
            for (int n = 0; n < cfg.N_s; ++n)
                CHECK(std::abs(std::abs(d.phases.psi_f(n)) - 1.0) < 1e-9);
            const RVector snr = phy::all_snrs(ch, cfg, d.phases, d.w);
            for (int u = 0; u < 4; ++u)
                if (d.a[u])
                    CHECK(snr(u) >= cfg.gamma_th * (1.0 - 1e-6));
        }
    }

    const RVector none = RVector::Zero(4);
    for (const auto &d : {baselines::random_phase_decide(none, ch, cfg, rng),
                          baselines::random_beamforming_decide(none, ch, cfg, rng)})
        CHECK(std::accumulate(d.a.begin(), d.a.end(), 0) == 0);

    SystemConfig off = cfg;
    off.P0 = 0.0;
    const auto d = baselines::random_beamforming_decide(w, ch, off, rng);
    CHECK(std::accumulate(d.a.begin(), d.a.end(), 0) == 0);
    CHECK(phy::total_power(d.w) == 0.0);
}

TEST_CASE("random beamforming with one antenna", "[baselines]")
{
    // with M = 1 the beam direction is a phase, so the value hinges on the power split
    SystemConfig cfg = preset("fig3a");
    cfg.N_s = 4;
    cfg.M = 1;
    cfg.gamma_th = 10.0;
    double rbf = 0.0, prop = 0.0;
    for (std::uint64_t s = 1; s <= 10; ++s)
    {
        Rng rng(s);
        const auto ch = draw_channels(cfg, rng);
        const RVector w = RVector::Ones(4);
        const auto d = baselines::random_beamforming_decide(w, ch, cfg, rng);
        CHECK(phy::total_power(d.w) <= cfg.P0 * (1.0 + 1e-9));
        rbf += d.objective;
        prop += sca::ao_optimize(w, ch, cfg, rng).decision.objective;
    }
    CHECK(rbf <= prop + 1.0);
}

TEST_CASE("random phases cost freshness against the proposed policy", "[baselines][sim]")
{
    SystemConfig cfg = preset("fig3a");
    cfg.N_s = 4;
    cfg.T = 30;
    long rps = 0, prop = 0;
    for (std::uint64_t s = 1; s <= 5; ++s)
    {
        rps += sim::run_episode(cfg, PolicyKind::RandomPhase, s).sum_aoi;
        prop += sim::run_episode(cfg, PolicyKind::Proposed, s).sum_aoi;
    }
    WARN("sum AoI over 5 seeds: rps " << rps << ", proposed " << prop);
    CHECK(rps >= prop);
}

TEST_CASE("with one element random phases match the proposed policy", "[baselines][sim]")
{
    // a single element only contributes a global phase, so both policies see the same problem
    SystemConfig cfg = preset("fig3a");
    cfg.N_s = 1;
    cfg.T = 10;
    cfg.gamma_th = 1.0;
    std::vector<double> diff;
    double mr = 0.0, mp = 0.0;
    const int n = 200;
    for (std::uint64_t s = 1; s <= n; ++s)
    {
        const double r = static_cast<double>(sim::run_episode(cfg, PolicyKind::RandomPhase, s).sum_aoi);
        const double p = static_cast<double>(sim::run_episode(cfg, PolicyKind::Proposed, s).sum_aoi);
        mr += r / n;
        mp += p / n;
        diff.push_back(r - p);
    }
    double var = 0.0;
    for (double d : diff)
        var += (d - (mr - mp)) * (d - (mr - mp)) / (n - 1);
    const double se = std::sqrt(var / n);
    WARN("N_s = 1: rps mean " << mr << ", proposed mean " << mp << ", paired se " << se);
    CHECK(std::abs(mr - mp) <= 3.0 * se + 1e-9);
}
