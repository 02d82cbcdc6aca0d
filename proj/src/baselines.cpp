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
#include "risaoi/errors.hpp"
#include "risaoi/sca.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>

namespace risaoi
{

std::string to_string(PolicyKind k)
{
    switch (k)
    {
    case PolicyKind::Proposed:
        return "proposed";
    case PolicyKind::FdAfRelay:
        return "fd-af";
    case PolicyKind::RandomPhase:
        return "rps";
    case PolicyKind::RandomBeamforming:
        return "rbf";
    }
    return "unknown";
}

PolicyKind parse_policy(const std::string &name)
{
    for (PolicyKind k : all_policies())
        if (to_string(k) == name)
            return k;
    throw Error("unknown policy '" + name + "' (expected proposed, fd-af, rps or rbf)");
}

const std::vector<PolicyKind> &all_policies()
{
    static const std::vector<PolicyKind> v{PolicyKind::Proposed, PolicyKind::FdAfRelay, PolicyKind::RandomPhase,
                                           PolicyKind::RandomBeamforming};
    return v;
}

namespace baselines
{
namespace
{

std::vector<int> by_weight(const RVector &weights)
{
    std::vector<int> s;
    for (int u = 0; u < weights.size(); ++u)
        if (weights(u) > 0.0)
            s.push_back(u);
    std::stable_sort(s.begin(), s.end(), [&](int x, int y) { return weights(x) > weights(y); });
    return s;
}

PhaseConfig unit_phases(int n) { return {CVector::Ones(n), CVector::Ones(n)}; }

sca::Clock::time_point slot_deadline(const SystemConfig &cfg)
{
    return sca::Clock::now() + std::chrono::duration_cast<sca::Clock::duration>(
                                   std::chrono::duration<double>(cfg.solver.slot_budget_s));
}

} // namespace

double relay_snr(const RelayChannels &rc, const CVector &w, int stream, const SystemConfig &cfg)
{
    const double g = std::norm(rc.h_ru[stream]);
    const double sigma2_u = cfg.is_front(stream) ? cfg.sigma2_F : cfg.sigma2_B;
    const double sig = std::norm(rc.h_ar.dot(w));
    return cfg.chi * g * sig / (cfg.chi * g * cfg.sigma2_o + sigma2_u);
}

SlotDecision fd_af_relay_decide(const RVector &weights, const RelayChannels &rc, const SystemConfig &cfg,
                                Rng & /*rng*/)
{
    SlotDecision d = sca::empty_decision(cfg, unit_phases(cfg.N_s));
    const double nrm = rc.h_ar.norm();
    if (!(nrm > 0.0))
        return d;
    const CVector dir = rc.h_ar / nrm;

    auto evaluate = [&](const std::vector<int> &set, RVector &snrs) {
        snrs = RVector::Zero(cfg.streams());
        if (set.empty())
            return true;
        const CVector w = std::sqrt(cfg.P0 / static_cast<double>(set.size())) * dir;
        for (int u : set)
        {
            snrs(u) = relay_snr(rc, w, u, cfg);
            if (!phy::success_check(snrs(u), cfg.gamma_th))
                return false;
        }
        return true;
    };

    std::vector<int> chosen;
    RVector snrs = RVector::Zero(cfg.streams());
    for (int u : by_weight(weights))
    {
        if (static_cast<int>(chosen.size()) >= cfg.E)
            break;
        auto trial = chosen;
        trial.push_back(u);
        RVector s;
        if (evaluate(trial, s))
        {
            chosen = std::move(trial);
            snrs = s;
        }
    }
    if (chosen.empty())
        return d;
    const CVector w = std::sqrt(cfg.P0 / static_cast<double>(chosen.size())) * dir;
    for (int u : chosen)
    {
        d.a[u] = 1;
        d.w[u] = w;
        d.objective += weights(u);
    }
    d.snrs = snrs;
    return d;
}

SlotDecision random_phase_decide(const RVector &weights, const ChannelRealization &ch, const SystemConfig &cfg,
                                 Rng &rng)
{
    const sca::InitPoint ip = sca::init_point(weights, ch, cfg, rng);
    if (!(weights.array() > 0.0).any())
        return sca::empty_decision(cfg, ip.phases);
    std::vector<CVector> w = ip.w;
    try
    {
        const auto act =
            sca::solve_active(weights, sca::effective_channels(ch, cfg, ip.phases), ip.w, cfg, slot_deadline(cfg));
        if (act.ok)
            w = act.w;
    }
    catch (const Error &)
    {
        // fall back to the matched-filter start
    }
    return sca::finalize(weights, w, ip.phases, ch, cfg);
}

SlotDecision random_beamforming_decide(const RVector &weights, const ChannelRealization &ch, const SystemConfig &cfg,
                                       Rng &rng)
{
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    std::normal_distribution<double> gauss(0.0, 1.0);
    PhaseConfig ph;
    ph.psi_f.resize(cfg.N_s);
    ph.psi_b.resize(cfg.N_s);
    for (int n = 0; n < cfg.N_s; ++n)
        ph.psi_f(n) = std::polar(1.0, phase(rng));
    for (int n = 0; n < cfg.N_s; ++n)
        ph.psi_b(n) = std::polar(1.0, phase(rng));

    std::vector<int> avail;
    for (int u = 0; u < cfg.streams(); ++u)
        if (weights(u) > 0.0)
            avail.push_back(u);
    std::vector<CVector> w(cfg.streams(), CVector::Zero(cfg.M));
    if (avail.empty())
        return sca::empty_decision(cfg, ph);
    const double per_stream = cfg.P0 / static_cast<double>(avail.size());
    for (int u : avail)
    {
        CVector dir(cfg.M);
        for (int m = 0; m < cfg.M; ++m)
            dir(m) = cplx(gauss(rng), gauss(rng));
        const double nrm = dir.norm();
        w[u] = nrm > 0.0 ? CVector(std::sqrt(per_stream) * dir / nrm) : CVector::Zero(cfg.M);
    }

    try
    {
        sca::PassiveExpansion x0;
        x0.Psi_f = ph.psi_f * ph.psi_f.adjoint();
        x0.Psi_b = ph.psi_b * ph.psi_b.adjoint();
        sca::relaxed_value(weights, phy::all_snrs(ch, cfg, ph, w), cfg.gamma_th, cfg.E, &x0.a);
        const double before = sca::relaxed_value(weights, phy::all_snrs(ch, cfg, ph, w), cfg.gamma_th, cfg.E);
        const auto pas = sca::solve_passive(weights, ch, w, x0, cfg, slot_deadline(cfg));
        if (pas.ok)
        {
            PhaseConfig cand = ph;
            cand.psi_f = sca::extract_phase(pas.Psi_f);
            if ((weights.tail(cfg.K).array() > 0.0).any())
                cand.psi_b = sca::extract_phase(pas.Psi_b);
            const double after = sca::relaxed_value(weights, phy::all_snrs(ch, cfg, cand, w), cfg.gamma_th, cfg.E);
            if (after >= before)
                ph = cand;
        }
    }
    catch (const Error &)
    {
        // keep the random phases
    }
    return sca::finalize(weights, w, ph, ch, cfg);
}

} // namespace baselines
} // namespace risaoi
