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

#include "risaoi/sim.hpp"
#include "risaoi/errors.hpp"
#include "risaoi/sca.hpp"

#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

namespace risaoi::sim
{
namespace
{

double unit_modulus_error(const PhaseConfig &ph)
{
    double e = 0.0;
    for (const CVector *v : {&ph.psi_f, &ph.psi_b})
        for (Eigen::Index i = 0; i < v->size(); ++i)
            e = std::max(e, std::abs(std::abs((*v)(i)) - 1.0));
    return e;
}

double t95(int df)
{
    const boost::math::students_t dist(static_cast<double>(df));
    return boost::math::quantile(boost::math::complement(dist, 0.025));
}

} // namespace

DecideFn policy_fn(PolicyKind kind)
{
    switch (kind)
    {
    case PolicyKind::Proposed:
        return [](const SlotContext &c) { return sca::ao_optimize(c.weights, c.channels, c.cfg, c.rng).decision; };
    case PolicyKind::FdAfRelay:
        return [](const SlotContext &c) { return baselines::fd_af_relay_decide(c.weights, c.relay, c.cfg, c.rng); };
    case PolicyKind::RandomPhase:
        return [](const SlotContext &c) { return baselines::random_phase_decide(c.weights, c.channels, c.cfg, c.rng); };
    case PolicyKind::RandomBeamforming:
        return [](const SlotContext &c) {
            return baselines::random_beamforming_decide(c.weights, c.channels, c.cfg, c.rng);
        };
    }
    throw Error("unknown policy kind");
}

Trajectory run_episode(const SystemConfig &cfg, PolicyKind policy, std::uint64_t seed)
{
    return run_episode(cfg, policy_fn(policy), seed, policy);
}

Trajectory run_episode(const SystemConfig &cfg, const DecideFn &decide, std::uint64_t seed, PolicyKind tag)
{
    validate(cfg);
    Trajectory traj;
    traj.seed = seed;
    traj.policy = tag;
    traj.slots.reserve(static_cast<std::size_t>(cfg.T));

    Rng geo = make_rng(seed, Stream::Geometry);
    const LosComponents los = draw_los(cfg, geo);
    Rng relay_geo = make_rng(seed, Stream::Relay);
    const RelayChannels relay_los = draw_relay_los(cfg, relay_geo);
    Rng arrivals = make_rng(seed, Stream::Arrivals);

    auto state = aoi::initial_state(cfg);
    const int U = cfg.streams();
    const PhaseConfig ones{CVector::Ones(cfg.N_s), CVector::Ones(cfg.N_s)};

    for (int t = 1; t <= cfg.T; ++t)
    {
        aoi::draw_arrivals(state, cfg.p_arr, arrivals);
        aoi::begin_slot(state);

        Rng chan = make_rng(seed, Stream::Channel, static_cast<std::uint64_t>(t));
        const ChannelRealization ch = draw_channels(cfg, los, chan);
        Rng relay_rng = make_rng(seed, Stream::Relay, static_cast<std::uint64_t>(t));
        const RelayChannels rc = draw_relay_channels(cfg, relay_los, relay_rng);
        Rng policy_rng = make_rng(seed, Stream::Policy, static_cast<std::uint64_t>(t));
        const RVector weights = aoi::reduction_weights(state);

        SlotRecord rec;
        rec.slot = t;
        SlotDecision d;
        try
        {
            d = decide(SlotContext{cfg, weights, ch, rc, state, policy_rng});
            if (static_cast<int>(d.a.size()) != U || d.snrs.size() != U)
                throw DimensionMismatch("policy returned a decision of the wrong size");
        }
        catch (const Error &)
        {
            d = sca::empty_decision(cfg, ones);
            rec.fallback = true;
            ++traj.fallbacks;
        }

        std::vector<int> success(U, 0);
        for (int u = 0; u < U; ++u)
            success[u] = (d.a[u] && state.stream(u).eta && phy::success_check(d.snrs(u), cfg.gamma_th)) ? 1 : 0;

        rec.power = phy::total_power(d.w);
        rec.unit_modulus = unit_modulus_error(d.phases);
        rec.streams.resize(U);
        for (int u = 0; u < U; ++u)
        {
            auto &r = rec.streams[u];
            r.z = state.stream(u).z;
            r.eta = state.stream(u).eta;
            r.a = d.a[u];
            r.success = success[u];
            r.snr = d.a[u] ? d.snrs(u) : 0.0;
        }
        aoi::end_slot(state, d.a, success);
        for (int u = 0; u < U; ++u)
            rec.streams[u].A = state.stream(u).A;
        traj.sum_aoi += aoi::sum_age(state);
        traj.slots.push_back(std::move(rec));
    }
    return traj;
}

std::pair<double, double> mean_ci95(const std::vector<long> &x)
{
    const int n = static_cast<int>(x.size());
    if (n == 0)
        return {0.0, 0.0};
    double mean = 0.0;
    for (long v : x)
        mean += static_cast<double>(v);
    mean /= n;
    if (n < 2)
        return {mean, 0.0};
    double ss = 0.0;
    for (long v : x)
        ss += (static_cast<double>(v) - mean) * (static_cast<double>(v) - mean);
    const double sd = std::sqrt(ss / (n - 1));
    return {mean, t95(n - 1) * sd / std::sqrt(static_cast<double>(n))};
}

long recount_sum_aoi(const Trajectory &t)
{
    long s = 0;
    for (const auto &slot : t.slots)
        for (const auto &r : slot.streams)
            s += r.A;
    return s;
}

SweepResult run_sweep(const SystemConfig &cfg, const std::vector<PolicyKind> &policies, const std::string &axis,
                      const std::vector<double> &values, const std::vector<std::uint64_t> &seeds, int jobs,
                      const EpisodeSink &sink)
{
    std::vector<double> sorted = values;
    std::stable_sort(sorted.begin(), sorted.end());

    struct Task
    {
        std::size_t vi, pi, si;
    };
    std::vector<Task> tasks;
    for (std::size_t vi = 0; vi < sorted.size(); ++vi)
        for (std::size_t pi = 0; pi < policies.size(); ++pi)
            for (std::size_t si = 0; si < seeds.size(); ++si)
                tasks.push_back({vi, pi, si});

    std::vector<SystemConfig> cfgs;
    for (double v : sorted)
    {
        SystemConfig c = cfg;
        if (!axis.empty()) // empty axis: plain replication of the base config
            apply_axis(c, axis, v);
        validate(c);
        cfgs.push_back(c);
    }

    std::vector<long> sums(tasks.size(), 0);
    std::atomic<std::size_t> next{0};
    std::mutex sink_mu;
    std::exception_ptr err;
    std::mutex err_mu;
    auto worker = [&] {
        for (;;)
        {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size())
                return;
            const Task &tk = tasks[i];
            try
            {
                const Trajectory tr = run_episode(cfgs[tk.vi], policies[tk.pi], seeds[tk.si]);
                sums[i] = tr.sum_aoi;
                if (sink)
                {
                    std::lock_guard lock(sink_mu);
                    sink(EpisodeKey{policies[tk.pi], sorted[tk.vi], seeds[tk.si]}, tr);
                }
            }
            catch (...)
            {
                std::lock_guard lock(err_mu);
                if (!err)
                    err = std::current_exception();
                next = tasks.size();
            }
        }
    };
    int n = jobs > 0 ? jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    n = std::max(1, std::min<int>(n, static_cast<int>(tasks.size())));
    if (n == 1)
        worker();
    else
    {
        std::vector<std::thread> pool;
        for (int k = 0; k < n; ++k)
            pool.emplace_back(worker);
        for (auto &th : pool)
            th.join();
    }
    if (err)
        std::rethrow_exception(err);

    SweepResult res;
    res.axis = axis;
    res.values = sorted;
    for (std::size_t vi = 0; vi < sorted.size(); ++vi)
        for (std::size_t pi = 0; pi < policies.size(); ++pi)
        {
            SweepRow row;
            row.policy = policies[pi];
            row.axis_value = sorted[vi];
            for (std::size_t si = 0; si < seeds.size(); ++si)
                row.sums.push_back(sums[(vi * policies.size() + pi) * seeds.size() + si]);
            row.n_seeds = static_cast<int>(row.sums.size());
            std::tie(row.mean_sum_aoi, row.ci95) = mean_ci95(row.sums);
            res.rows.push_back(std::move(row));
        }
    return res;
}

} // namespace risaoi::sim
