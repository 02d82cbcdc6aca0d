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

#include "risaoi/oracle.hpp"
#include "risaoi/aoi.hpp"
#include "risaoi/channel.hpp"
#include "risaoi/errors.hpp"
#include "risaoi/phy.hpp"
#include "risaoi/sca.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

namespace risaoi::oracle
{
namespace
{

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

CVector random_cvec(int n, double scale, Rng &rng)
{
    std::normal_distribution<double> g(0.0, std::sqrt(0.5));
    CVector v(n);
    for (int i = 0; i < n; ++i)
        v(i) = scale * cplx(g(rng), g(rng));
    return v;
}

CVector random_phases(int n, Rng &rng)
{
    std::uniform_real_distribution<double> ph(0.0, 2.0 * std::numbers::pi);
    CVector v(n);
    for (int i = 0; i < n; ++i)
        v(i) = std::polar(1.0, ph(rng));
    return v;
}

double log_uniform(double lo, double hi, Rng &rng)
{
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng));
}

CMatrix random_psd(int n, Rng &rng)
{
    CMatrix A(n, n);
    for (int j = 0; j < n; ++j)
        A.col(j) = random_cvec(n, 1.0, rng);
    return A * A.adjoint() / static_cast<double>(n);
}

CMatrix random_hermitian(int n, double scale, Rng &rng)
{
    CMatrix A(n, n);
    for (int j = 0; j < n; ++j)
        A.col(j) = random_cvec(n, scale, rng);
    return 0.5 * (A + A.adjoint());
}

bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), 1e-300}); }

} // namespace

Mutation parse_mutation(const std::string &name)
{
    if (name.empty() || name == "none")
        return Mutation::None;
    if (name == "snr-denominator")
        return Mutation::SnrDenominator;
    throw Error("unknown mutation '" + name + "' (expected none or snr-denominator)");
}

CheckResult aoi_enumeration(int T)
{
    const auto t0 = Clock::now();
    CheckResult r;
    r.name = "aoi-enumeration";
    const int bits = 3 * T;
    const long total = 1L << bits;
    for (long mask = 0; mask < total; ++mask)
    {
        auto st = aoi::initial_state(1, 0);
        // timestamp model: the queued packet was generated at `gen`
        int gen = 0;
        bool queued = false;
        int age = 1;
        int sched_prev = 0;
        bool bad = false;
        for (int t = 1; t <= T && !bad; ++t)
        {
            const int p = static_cast<int>((mask >> (3 * (t - 1))) & 1);
            const int a = static_cast<int>((mask >> (3 * (t - 1) + 1)) & 1);
            const int s = static_cast<int>((mask >> (3 * (t - 1) + 2)) & 1);

            st.front[0].p = p;
            aoi::begin_slot(st);
            aoi::end_slot(st, {a}, {s});

            if (p)
            {
                gen = t;
                queued = true;
            }
            else if (sched_prev)
                queued = false;
            const int z = t - gen;
            if (a && queued && s)
                age = z + 1;
            else
                age += 1;
            sched_prev = a;

            const auto &x = st.front[0];
            bad = x.z != z || x.eta != (queued ? 1 : 0) || x.A != age;
        }
        ++r.cases;
        if (bad)
            ++r.mismatches;
    }
    r.pass = r.mismatches == 0;
    std::ostringstream d;
    d << r.cases << " sequences of length " << T << ", " << r.mismatches << " mismatches";
    r.detail = d.str();
    r.seconds = seconds_since(t0);
    return r;
}

CheckResult schedule_exhaustive(int instances, std::uint64_t seed)
{
    const auto t0 = Clock::now();
    CheckResult r;
    r.name = "schedule-exhaustive";
    Rng rng(seed ^ 0x5c4edu);
    std::uniform_int_distribution<int> small(1, 2), ebud(1, 3);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::ostringstream first;
    long scheduled = 0;
    for (int inst = 0; inst < instances; ++inst)
    {
        SystemConfig cfg;
        cfg.J = small(rng);
        cfg.K = small(rng);
        cfg.N_s = small(rng);
        cfg.M = small(rng);
        cfg.E = ebud(rng);
        const int U = cfg.streams();

        ChannelRealization ch = draw_channels(cfg, rng);
        const PhaseConfig ph{random_phases(cfg.N_s, rng), random_phases(cfg.N_s, rng)};
        RVector weights(U);
        for (int u = 0; u < U; ++u)
            weights(u) = unit(rng) < 0.2 ? 0.0 : std::floor(1.0 + 9.0 * unit(rng));
        std::vector<CVector> w(U);
        for (int u = 0; u < U; ++u)
            w[u] = random_cvec(cfg.M, std::sqrt(cfg.P0 / U), rng);
        const RVector snrs = phy::all_snrs(ch, cfg, ph, w);
        // threshold near a random stream's SNR so that some subsets are feasible and some are not
        cfg.gamma_th = snrs(std::uniform_int_distribution<int>(0, U - 1)(rng)) * log_uniform(0.2, 5.0, rng);

        // fractional schedule: the optimum sits on a vertex where every a_u is
        // 0 or its cap except at most one that fills the budget
        RVector cap(U);
        for (int u = 0; u < U; ++u)
            cap(u) = weights(u) > 0.0 ? std::min(1.0, snrs(u) / cfg.gamma_th) : 0.0;
        double best = 0.0;
        long labels = 1;
        for (int u = 0; u < U; ++u)
            labels *= 3;
        for (long code = 0; code < labels; ++code)
        {
            long c = code;
            double used = 0.0, val = 0.0;
            int filler = -1;
            bool ok = true;
            for (int u = 0; u < U; ++u, c /= 3)
            {
                const int l = static_cast<int>(c % 3);
                if (l == 1)
                {
                    used += cap(u);
                    val += weights(u) * cap(u);
                }
                else if (l == 2)
                {
                    if (filler >= 0)
                        ok = false;
                    filler = u;
                }
            }
            if (!ok || used > cfg.E + 1e-12)
                continue;
            if (filler >= 0)
                val += weights(filler) * std::clamp(cfg.E - used, 0.0, cap(filler));
            best = std::max(best, val);
        }
        RVector a_rel;
        const double got = sca::relaxed_value(weights, snrs, cfg.gamma_th, cfg.E, &a_rel);
        bool bad = std::abs(got - best) > 1e-9 * std::max(1.0, best);

        // rounded schedule: budget, power, thresholds and maximality
        const auto rs = sca::round_schedule(a_rel, weights, w, ph, ch, cfg);
        std::vector<int> chosen;
        for (int u = 0; u < U; ++u)
            if (rs.a[u])
                chosen.push_back(u);
        bad = bad || static_cast<int>(chosen.size()) > cfg.E;
        bad = bad || phy::total_power(rs.w) > cfg.P0 * (1.0 + 1e-9);
        for (int u : chosen)
            bad = bad || weights(u) <= 0.0 || !phy::success_check(rs.snrs(u), cfg.gamma_th);
        if (static_cast<int>(chosen.size()) < cfg.E)
            for (int u = 0; u < U; ++u)
            {
                if (rs.a[u] || weights(u) <= 0.0)
                    continue;
                auto trial = chosen;
                trial.push_back(u);
                if (sca::schedule_subset(trial, w, ph, ch, cfg))
                    bad = true;
            }
        ++r.cases;
        scheduled += static_cast<long>(chosen.size());
        if (bad)
        {
            if (r.mismatches == 0)
                first << "; first failure at instance " << inst << " (relaxed " << got << " vs " << best << ")";
            ++r.mismatches;
        }
    }
    r.pass = r.mismatches == 0;
    std::ostringstream d;
    d << r.cases << " instances (" << scheduled << " streams scheduled), " << r.mismatches << " mismatches"
      << first.str();
    r.detail = d.str();
    r.seconds = seconds_since(t0);
    return r;
}

CheckResult snr_duality(int instances, std::uint64_t seed, Mutation m)
{
    const auto t0 = Clock::now();
    CheckResult r;
    r.name = "snr-duality";
    Rng rng(seed ^ 0xd0a1u);
    std::uniform_int_distribution<int> dimM(1, 6), dimN(1, 16), users(1, 3);
    const double sign = m == Mutation::SnrDenominator ? -1.0 : 1.0;
    double worst = 0.0;
    for (int inst = 0; inst < instances; ++inst)
    {
        const int M = dimM(rng), N = dimN(rng), J = users(rng), K = users(rng);
        ChannelRealization ch;
        ch.G.resize(N, M);
        for (int c = 0; c < M; ++c)
            ch.G.col(c) = random_cvec(N, log_uniform(1e-3, 1.0, rng), rng);
        for (int j = 0; j < J; ++j)
            ch.h_F.push_back(random_cvec(N, log_uniform(1e-3, 1.0, rng), rng));
        for (int k = 0; k < K; ++k)
            ch.h_B.push_back(random_cvec(N, log_uniform(1e-3, 1.0, rng), rng));
        ch.g_f = random_cvec(N, log_uniform(1e-2, 1.0, rng), rng);
        ch.g_b = random_cvec(N, log_uniform(1e-2, 1.0, rng), rng);
        const CVector pf = random_phases(N, rng), pb = random_phases(N, rng);
        const CVector w = random_cvec(M, 1.0, rng);
        const double chi = log_uniform(1.0, 1e3, rng);
        const double s2F = log_uniform(1e-6, 1.0, rng);
        const double s2B = log_uniform(1e-6, 1.0, rng);

        for (int j = 0; j < J; ++j)
        {
            const double a = phy::snr_front(ch, pf, w, j, s2F);
            const double b = phy::snr_front_cascaded(phy::cascaded_front(ch, pf, j), w, s2F);
            worst = std::max(worst, std::abs(a - b) / std::max(std::abs(b), 1e-300));
            ++r.cases;
            if (!rel_close(a, b, 1e-10))
                ++r.mismatches;
        }
        for (int k = 0; k < K; ++k)
        {
            // keep the relay-noise share of the denominator away from zero
            const double relay2 = std::norm(phy::relay_link(ch, pb, k));
            const double s2o = s2B / std::max(chi * relay2, 1e-300) * log_uniform(0.1, 10.0, rng);
            const double a = phy::detail::snr_back_formula(ch, pf, pb, w, k, chi, s2o, s2B, sign);
            const double b = phy::snr_back_cascaded(phy::cascaded_back(ch, pf, pb, k), phy::relay_link(ch, pb, k), w,
                                                    chi, s2o, s2B);
            worst = std::max(worst, std::abs(a - b) / std::max(std::abs(b), 1e-300));
            ++r.cases;
            if (!rel_close(a, b, 1e-10))
                ++r.mismatches;
        }
    }
    r.pass = r.mismatches == 0;
    std::ostringstream d;
    d << r.cases << " SNR pairs over " << instances << " instances, " << r.mismatches
      << " mismatches, worst relative difference " << worst;
    r.detail = d.str();
    r.seconds = seconds_since(t0);
    return r;
}

CheckResult dc_bounds(int instances, std::uint64_t seed)
{
    const auto t0 = Clock::now();
    CheckResult r;
    r.name = "dc-bounds";
    Rng rng(seed ^ 0xdcb0u);
    std::uniform_int_distribution<int> dimN(1, 8);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst_tight = 0.0, worst_violation = 0.0;
    for (int inst = 0; inst < instances; ++inst)
    {
        const int N = dimN(rng);

        // bilinear relay-noise term
        const CVector v = random_cvec(N, 1.0, rng);
        const CMatrix Hk = v * v.adjoint();
        const CMatrix P0 = random_psd(N, rng);
        const double a0 = unit(rng);
        const auto sb = sca::dc_sigma_bound(P0, a0, Hk, log_uniform(1.0, 1e3, rng), log_uniform(1e-3, 1.0, rng),
                                            log_uniform(1.0, 1e3, rng), 1);
        const double tight1 = std::abs(sb.bound(sb.x0, sb.a0) - sb.exact(sb.x0, sb.a0));
        const double x = std::real((random_psd(N, rng) * Hk).trace());
        const double a = unit(rng);
        const double viol1 = sb.exact(x, a) - sb.bound(x, a);

        // signal term with the coupled matrices
        const CMatrix Ht = random_hermitian(N, 1.0, rng) + CMatrix::Identity(N, N) * cplx(0.0, 0.3);
        const CMatrix Pb0 = random_psd(N, rng), Pf0 = random_psd(N, rng);
        const auto sg = sca::dc_signal_bound(Pb0, Pf0, Ht, log_uniform(1.0, 1e3, rng));
        const double tight2 = std::abs(sg.bound(Pb0, Pf0) - sg.exact(Pb0, Pf0));
        const CMatrix Pb = Pb0 + random_hermitian(N, unit(rng), rng);
        const CMatrix Pf = Pf0 + random_hermitian(N, unit(rng), rng);
        const double scale2 = std::max(1.0, std::abs(sg.exact(Pb, Pf)));
        const double viol2 = (sg.exact(Pb, Pf) - sg.bound(Pb, Pf)) / scale2;

        // tightness is judged relative to the size of the terms it cancels
        const double t1n = tight1 / std::max(1.0, sb.scale * (1.0 + sb.x0) * (1.0 + sb.a0));
        const double t2n = tight2 / std::max(1.0, sg.chi * (1.0 + sg.c * sg.c * Pb0.squaredNorm() +
                                                             sg.M0.squaredNorm() / (sg.c * sg.c)));
        worst_tight = std::max({worst_tight, t1n, t2n});
        worst_violation = std::max({worst_violation, viol1 / std::max(1.0, std::abs(sb.exact(x, a))), viol2});
        r.cases += 2;
        if (t1n > 1e-8 || viol1 > 1e-9 * std::max(1.0, std::abs(sb.exact(x, a))))
            ++r.mismatches;
        if (t2n > 1e-8 || viol2 > 1e-9)
            ++r.mismatches;
    }
    r.pass = r.mismatches == 0;
    std::ostringstream d;
    d << r.cases << " bound evaluations, " << r.mismatches << " failures, worst tightness gap " << worst_tight
      << ", worst violation " << worst_violation;
    r.detail = d.str();
    r.seconds = seconds_since(t0);
    return r;
}

std::vector<CheckResult> run_all(const Options &o)
{
    return {aoi_enumeration(o.aoi_horizon), schedule_exhaustive(o.instances, o.seed),
            snr_duality(o.instances, o.seed, o.mutation), dc_bounds(o.instances, o.seed)};
}

} // namespace risaoi::oracle
