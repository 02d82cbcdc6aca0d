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

#include "risaoi/sca.hpp"
#include "risaoi/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace risaoi::sca
{

using conic::AffineExpr;
using conic::ConeProgram;

namespace
{

std::vector<int> active_streams(const RVector &weights)
{
    std::vector<int> s;
    for (int u = 0; u < weights.size(); ++u)
        if (weights(u) > 0.0)
            s.push_back(u);
    return s;
}

double max_weight(const RVector &weights, const std::vector<int> &streams)
{
    double m = 0.0;
    for (int u : streams)
        m = std::max(m, weights(u));
    return m;
}

bool expired(const std::optional<Clock::time_point> &deadline)
{
    return deadline && Clock::now() >= *deadline;
}

/// Streams in decreasing `key` order, ties to the lower index.
std::vector<int> order_by(const RVector &key, const std::vector<int> &streams)
{
    std::vector<int> s = streams;
    std::stable_sort(s.begin(), s.end(), [&](int x, int y) { return key(x) > key(y); });
    return s;
}

CMatrix outer(const CVector &v) { return v * v.adjoint(); }

double frob_inner(const CMatrix &A, const CMatrix &B) { return std::real((A.adjoint() * B).trace()); }

constexpr double kHopeless = 1e-3;

/// Upper bound of a stream's SNR over all phase matrices with unit diagonal
/// (|Psi_ij| <= 1), beamformers fixed.
double passive_snr_bound(const ChannelRealization &ch, const std::vector<CVector> &w, int u, const SystemConfig &cfg)
{
    if (cfg.is_front(u))
    {
        const double l1 = phy::front_trace_vector(ch, w[u], u).cwiseAbs().sum();
        return l1 * l1 / cfg.sigma2_F;
    }
    const double v1 = phy::back_relay_vector(ch, u - cfg.J).cwiseAbs().sum();
    const double u1 = phy::back_front_vector(ch, w[u]).cwiseAbs().sum();
    return cfg.chi * v1 * v1 * u1 * u1 / cfg.sigma2_B;
}

} // namespace

// ----------------------------------------------------------------- helpers

std::vector<CVector> effective_channels(const ChannelRealization &ch, const SystemConfig &cfg, const PhaseConfig &ph)
{
    std::vector<CVector> g;
    for (int u = 0; u < cfg.streams(); ++u)
    {
        if (cfg.is_front(u))
        {
            g.push_back(phy::cascaded_front(ch, ph.psi_f, u) / std::sqrt(cfg.sigma2_F));
        }
        else
        {
            const int k = u - cfg.J;
            const cplx r = phy::relay_link(ch, ph.psi_b, k);
            const double denom = cfg.chi * std::norm(r) * cfg.sigma2_o + cfg.sigma2_B;
            g.push_back(phy::cascaded_back(ch, ph.psi_f, ph.psi_b, k) * std::sqrt(cfg.chi / denom));
        }
    }
    return g;
}

double linearized_power(const CVector &h, const CVector &w0, const CVector &w)
{
    const cplx s0 = h.dot(w0);
    const cplx s = h.dot(w);
    return 2.0 * std::real(std::conj(s0) * s) - std::norm(s0);
}

double relaxed_value(const RVector &weights, const RVector &snrs, double gamma_th, int E, RVector *a_out)
{
    RVector a = RVector::Zero(weights.size());
    double remaining = E;
    double value = 0.0;
    for (int u : order_by(weights, active_streams(weights)))
    {
        if (remaining <= 0.0)
            break;
        const double cap = gamma_th > 0.0 ? std::min(1.0, snrs(u) / gamma_th) : 1.0;
        a(u) = std::min(std::max(cap, 0.0), remaining);
        remaining -= a(u);
        value += weights(u) * a(u);
    }
    if (a_out)
        *a_out = a;
    return value;
}

double value_ceiling(const RVector &weights, int E)
{
    const auto s = order_by(weights, active_streams(weights));
    double v = 0.0;
    for (int i = 0; i < std::min<int>(E, static_cast<int>(s.size())); ++i)
        v += weights(s[i]);
    return v;
}

// -------------------------------------------------------------- init point

InitPoint init_point(const RVector &weights, const ChannelRealization &ch, const SystemConfig &cfg, Rng &rng)
{
    InitPoint ip;
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    ip.phases.psi_f.resize(cfg.N_s);
    ip.phases.psi_b.resize(cfg.N_s);
    for (int n = 0; n < cfg.N_s; ++n)
        ip.phases.psi_f(n) = std::polar(1.0, phase(rng));
    for (int n = 0; n < cfg.N_s; ++n)
        ip.phases.psi_b(n) = std::polar(1.0, phase(rng));

    const auto streams = active_streams(weights);
    const auto gains = effective_channels(ch, cfg, ip.phases);
    ip.w.assign(cfg.streams(), CVector::Zero(cfg.M));
    ip.a = RVector::Zero(cfg.streams());
    if (streams.empty())
        return ip;
    const double per_stream = cfg.P0 / static_cast<double>(streams.size());
    for (int u : streams)
    {
        CVector dir = gains[u];
        const double nrm = dir.norm();
        if (nrm > 0.0)
            dir /= nrm;
        else
            dir = CVector::Unit(cfg.M, 0);
        ip.w[u] = std::sqrt(per_stream) * dir;
    }
    return ip;
}

// ------------------------------------------------------- active subproblem

ActiveProgram build_active(const RVector &weights, const std::vector<CVector> &gains,
                           const std::vector<CVector> &prev_w, const SystemConfig &cfg)
{
    ActiveProgram ap;
    ap.streams = active_streams(weights);
    auto &p = ap.program;
    if (ap.streams.empty())
    {
        p.maximize(AffineExpr(0.0));
        return ap;
    }
    ap.weight_scale = max_weight(weights, ap.streams);
    const double sqrt_p0 = std::sqrt(cfg.P0);

    AffineExpr objective;
    AffineExpr budget(static_cast<double>(cfg.E));
    std::vector<AffineExpr> power;
    for (int u : ap.streams)
    {
        auto w = p.add_complex_vector(cfg.M, "w" + std::to_string(u));
        const int a = p.add_variable("a" + std::to_string(u));
        objective.add_term(a, weights(u) / ap.weight_scale);
        budget.add_term(a, -1.0);
        p.add_nonnegative(AffineExpr::variable(a));
        p.add_nonnegative(1.0 - AffineExpr::variable(a));
        for (auto &e : w.as_real_components())
            power.push_back(e);

        if (cfg.gamma_th > 0.0)
        {
            // SNR_u / gamma_th = |c^H w~|^2 with w = sqrt(P0) w~
            const CVector c = gains[u] * std::sqrt(cfg.P0 / cfg.gamma_th);
            const CVector w0 = sqrt_p0 > 0.0 ? CVector(prev_w[u] / sqrt_p0) : CVector(CVector::Zero(cfg.M));
            const cplx s0 = c.dot(w0);
            AffineExpr lhs = w.real_inner(2.0 * s0 * c);
            lhs -= AffineExpr(std::norm(s0));
            lhs -= AffineExpr::variable(a);
            p.add_nonnegative(lhs);
        }
        ap.w.push_back(w);
        ap.a.push_back(a);
    }
    p.add_nonnegative(budget);
    p.add_second_order(AffineExpr(1.0), power);
    p.maximize(objective);
    return ap;
}

ActiveResult solve_active(const RVector &weights, const std::vector<CVector> &gains, const std::vector<CVector> &w0,
                          const SystemConfig &cfg, std::optional<Clock::time_point> deadline)
{
    const auto &sp = cfg.solver;
    ActiveResult res;
    res.tolerance = sp.cone_tol;
    res.w = w0;
    res.a = RVector::Zero(cfg.streams());
    const auto streams = active_streams(weights);
    if (streams.empty())
    {
        res.ok = true;
        return res;
    }
    const double ceiling = value_ceiling(weights, cfg.E) / max_weight(weights, streams);
    conic::SolveOptions opts;
    opts.tol = sp.cone_tol;

    double prev = -std::numeric_limits<double>::infinity();
    for (int it = 0; it < sp.max_sca_iters; ++it)
    {
        if (expired(deadline))
            break;
        const ActiveProgram ap = build_active(weights, gains, res.w, cfg);
        const auto sol = conic::solve(ap.program, opts);
        ++res.solves;
        if (!sol.optimal())
            break;
        const double obj = sol.objective_value;
        if (obj < prev - sp.cone_tol * std::max(1.0, std::abs(prev)))
        {
            ++res.rejected;
            break;
        }
        for (std::size_t i = 0; i < ap.streams.size(); ++i)
        {
            const int u = ap.streams[i];
            res.w[u] = std::sqrt(cfg.P0) * ap.w[i].value(sol.values);
            res.a(u) = std::clamp(sol.values(ap.a[i]), 0.0, 1.0);
        }
        res.ok = true;
        res.trace.push_back(obj);
        res.objective = obj * ap.weight_scale;
        if (obj >= ceiling - sp.cone_tol * std::max(1.0, ceiling))
            break;
        if (it > 0 && std::abs(obj - prev) <= sp.eps_conv * std::max(std::abs(prev), 1e-9))
            break;
        prev = obj;
    }
    return res;
}

// --------------------------------------------------------------- DC bounds

double BilinearBound::convex_part(double x, double a) const
{
    const double q = c * x + a / c;
    return 0.25 * scale * q * q;
}

double BilinearBound::tangent(double x, double a) const
{
    const double q0 = c * x0 - a0 / c;
    return -0.25 * scale * (q0 * q0 + 2.0 * q0 * (c * (x - x0) - (a - a0) / c));
}

BilinearBound dc_sigma_bound(const CMatrix &prev_Psi_b, double prev_a, const CMatrix &H_kB, double chi,
                             double sigma2_o, double gamma_th, int eta)
{
    BilinearBound b;
    b.scale = chi * sigma2_o * gamma_th * static_cast<double>(eta);
    b.x0 = std::real((prev_Psi_b * H_kB).trace());
    b.a0 = prev_a;
    b.c = std::clamp(1.0 / std::sqrt(std::max(b.x0, 1e-9)), 1e-3, 1e3);
    return b;
}

double SignalBound::exact(const CMatrix &Psi_b, const CMatrix &Psi_f) const
{
    return -chi * frob_inner(Psi_b, M(Psi_f));
}

double SignalBound::bound(const CMatrix &Psi_b, const CMatrix &Psi_f) const
{
    const CMatrix Mv = M(Psi_f);
    const double c2 = c * c;
    const double convex = 0.5 * (c * Psi_b - Mv / c).squaredNorm();
    const double lin_b = 0.5 * c2 * (2.0 * frob_inner(Psi_b0, Psi_b) - Psi_b0.squaredNorm());
    const double lin_m = 0.5 * (2.0 * frob_inner(M0, Mv) - M0.squaredNorm()) / c2;
    return chi * (convex - lin_b - lin_m);
}

SignalBound dc_signal_bound(const CMatrix &prev_Psi_b, const CMatrix &prev_Psi_f, const CMatrix &Htilde, double chi,
                            double balance)
{
    SignalBound s;
    s.chi = chi;
    s.Htilde = Htilde;
    s.Psi_b0 = prev_Psi_b;
    s.M0 = s.M(prev_Psi_f);
    if (balance > 0.0)
        s.c = balance;
    else
    {
        const double nb = prev_Psi_b.norm();
        const double nm = s.M0.norm();
        s.c = (nb > 0.0 && nm > 0.0) ? std::sqrt(std::clamp(nm / nb, 1e-12, 1e12)) : 1.0;
    }
    return s;
}

double spectral_penalty(const CMatrix &Psi, const CMatrix &prev_Psi)
{
    const auto ep = numerics::principal_eig(prev_Psi);
    const double nuclear = numerics::nuclear_and_spectral(Psi).first;
    const CMatrix D = numerics::hermitian_part(Psi - prev_Psi);
    const double tangent = std::real(ep.vector.dot(D * ep.vector));
    return nuclear - (ep.value + tangent);
}

double rank_one_gap(const CMatrix &Psi)
{
    const auto [nuc, spec] = numerics::nuclear_and_spectral(numerics::hermitian_part(Psi));
    return spec > 0.0 ? (nuc - spec) / spec : 0.0;
}

// ------------------------------------------------------ passive subproblem

PassiveProgram build_passive(const RVector &weights, const ChannelRealization &ch, const std::vector<CVector> &w,
                             const PassiveExpansion &x0, const SystemConfig &cfg, double penalty)
{
    PassiveProgram pp;
    pp.streams = active_streams(weights);
    auto &p = pp.program;
    if (pp.streams.empty())
    {
        p.maximize(AffineExpr(0.0));
        return pp;
    }
    pp.weight_scale = max_weight(weights, pp.streams);
    const int N = cfg.N_s;
    // streams that cannot reach a useful fraction of the threshold under any
    // phase choice are left out; they only flatten the feasible set
    bool need_f = false, need_b = false;
    for (int u : pp.streams)
    {
        const bool keep = !(cfg.gamma_th > 0.0) || passive_snr_bound(ch, w, u, cfg) / cfg.gamma_th >= kHopeless;
        pp.a.push_back(keep ? 0 : -1);
        if (keep)
        {
            need_f = true;
            need_b = need_b || !cfg.is_front(u);
        }
    }
    if (need_f)
    {
        pp.Psi_f = p.add_hermitian(N, 1.0, "Psi_f");
        p.add_hermitian_psd(*pp.Psi_f);
    }
    if (need_b)
    {
        pp.Psi_b = p.add_hermitian(N, 1.0, "Psi_b");
        p.add_hermitian_psd(*pp.Psi_b);
    }

    AffineExpr objective;
    AffineExpr budget(static_cast<double>(cfg.E));
    for (std::size_t i = 0; i < pp.streams.size(); ++i)
    {
        if (pp.a[i] < 0)
            continue;
        const int u = pp.streams[i];
        const int a = p.add_variable("a" + std::to_string(u));
        pp.a[i] = a;
        objective.add_term(a, weights(u) / pp.weight_scale);
        budget.add_term(a, -1.0);
        p.add_nonnegative(AffineExpr::variable(a));
        p.add_nonnegative(1.0 - AffineExpr::variable(a));
    }
    p.add_nonnegative(budget);

    if (penalty > 0.0)
    {
        // -C (N - u^H Psi u): nuclear norm is the trace N under the unit diagonal
        if (pp.Psi_f)
        {
            const CVector uf = numerics::principal_eig(x0.Psi_f).vector;
            objective += penalty * (pp.Psi_f->trace_product(outer(uf)) - static_cast<double>(N));
        }
        if (pp.Psi_b)
        {
            const CVector ub = numerics::principal_eig(x0.Psi_b).vector;
            objective += penalty * (pp.Psi_b->trace_product(outer(ub)) - static_cast<double>(N));
        }
    }
    p.maximize(objective);

    if (!(cfg.gamma_th > 0.0))
        return pp;

    for (std::size_t i = 0; i < pp.streams.size(); ++i)
    {
        const int u = pp.streams[i];
        if (pp.a[i] < 0)
            continue;
        const AffineExpr a = AffineExpr::variable(pp.a[i]);
        if (cfg.is_front(u))
        {
            const CVector d = phy::front_trace_vector(ch, w[u], u);
            const CMatrix Dn = outer(d) / (cfg.gamma_th * cfg.sigma2_F);
            p.add_nonnegative(pp.Psi_f->trace_product(Dn) - a);
            continue;
        }
        const int k = u - cfg.J;
        const CVector v = phy::back_relay_vector(ch, k);
        const CVector uu = phy::back_front_vector(ch, w[u]);
        const double nv2 = v.squaredNorm();
        const double nu2 = uu.squaredNorm();
        // chi' x y >= a (kappa' x + 1) with x = Tr(Psi_b Vn), y = Tr(Psi_f Un)
        const CMatrix Vn = outer(v) / nv2;
        const CMatrix Un = outer(uu) / nu2;
        const double kappa = cfg.chi * cfg.sigma2_o * nv2 / cfg.sigma2_B;
        const double chi_n = cfg.chi * nv2 * nu2 / (cfg.gamma_th * cfg.sigma2_B);

        const int y = p.add_variable("sf" + std::to_string(u));
        p.add_equality(AffineExpr::variable(y) - pp.Psi_f->trace_product(Un));
        const AffineExpr x = pp.Psi_b->trace_product(Vn);

        // relay-noise term kappa' x a
        const BilinearBound sig = dc_sigma_bound(x0.Psi_b, x0.a(u), Vn, kappa, 1.0, 1.0, 1);
        const double q0 = sig.c * sig.x0 - sig.a0 / sig.c;
        const int t1 = p.add_variable("t_sigma" + std::to_string(u));
        p.add_rotated_second_order(AffineExpr::variable(t1), AffineExpr(1.0),
                                   {std::sqrt(0.25 * kappa) * (sig.c * x + (1.0 / sig.c) * a)});
        AffineExpr lin1 = (-0.25 * kappa) * (AffineExpr(q0 * q0) +
                                             (2.0 * q0) * (sig.c * (x - AffineExpr(sig.x0)) -
                                                           (1.0 / sig.c) * (a - AffineExpr(sig.a0))));

        // signal term -chi' x y = -chi' Tr(Psi_b M), M = y Vn
        const double y0 = std::real((x0.Psi_f * Un).trace());
        const double nb0 = x0.Psi_b.norm();
        const double cb = (y0 > 0.0 && nb0 > 0.0) ? std::sqrt(std::clamp(y0 / nb0, 1e-12, 1e12)) : 1.0;
        const double s2 = std::sqrt(0.5 * chi_n);
        const auto &B = *pp.Psi_b;
        std::vector<AffineExpr> frob;
        frob.reserve(static_cast<std::size_t>(N) * N);
        for (int r = 0; r < N; ++r)
        {
            const auto e = B.entry(r, r);
            frob.push_back(s2 * (cb * e.re - AffineExpr::variable(y, Vn(r, r).real() / cb)));
            for (int c = r + 1; c < N; ++c)
            {
                const auto f = B.entry(r, c);
                const double k2 = std::numbers::sqrt2 * s2;
                frob.push_back(k2 * (cb * f.re - AffineExpr::variable(y, Vn(r, c).real() / cb)));
                frob.push_back(k2 * (cb * f.im - AffineExpr::variable(y, Vn(r, c).imag() / cb)));
            }
        }
        const int t2 = p.add_variable("t_signal" + std::to_string(u));
        p.add_rotated_second_order(AffineExpr::variable(t2), AffineExpr(1.0), std::move(frob));
        AffineExpr lin2 = (-0.5 * chi_n * cb * cb) * (2.0 * B.trace_product(x0.Psi_b) - AffineExpr(x0.Psi_b.squaredNorm()));
        lin2 -= (0.5 * chi_n / (cb * cb)) * (AffineExpr::variable(y, 2.0 * y0) - AffineExpr(y0 * y0));

        AffineExpr total = AffineExpr::variable(t1) + lin1 + a + AffineExpr::variable(t2) + lin2;
        p.add_nonnegative(-total);
    }
    return pp;
}

namespace
{

double penalized_value(const PassiveProgram &pp, const RVector &x, const RVector &weights, double C, int N,
                       CMatrix *Psi_f, CMatrix *Psi_b)
{
    double v = 0.0;
    for (std::size_t i = 0; i < pp.streams.size(); ++i)
        if (pp.a[i] >= 0)
            v += weights(pp.streams[i]) / pp.weight_scale * std::clamp(x(pp.a[i]), 0.0, 1.0);
    if (pp.Psi_f)
    {
        *Psi_f = numerics::hermitian_part(pp.Psi_f->value(x));
        v -= C * (N - numerics::principal_eig(*Psi_f).value);
    }
    if (pp.Psi_b)
    {
        *Psi_b = numerics::hermitian_part(pp.Psi_b->value(x));
        v -= C * (N - numerics::principal_eig(*Psi_b).value);
    }
    return v;
}

} // namespace

PassiveResult solve_passive(const RVector &weights, const ChannelRealization &ch, const std::vector<CVector> &w,
                            const PassiveExpansion &x0, const SystemConfig &cfg,
                            std::optional<Clock::time_point> deadline)
{
    const auto &sp = cfg.solver;
    PassiveResult res;
    res.tolerance = sp.cone_tol;
    res.Psi_f = x0.Psi_f;
    res.Psi_b = x0.Psi_b;
    res.a = x0.a;
    const auto streams = active_streams(weights);
    if (streams.empty())
    {
        res.ok = true;
        return res;
    }
    conic::SolveOptions opts;
    opts.tol = sp.cone_tol;
    const double C = sp.penalty_scale;

    PassiveExpansion x = x0;
    double prev = -std::numeric_limits<double>::infinity();
    for (int it = 0; it < sp.max_sca_iters; ++it)
    {
        if (expired(deadline))
            break;
        // the first pass is the plain relaxation; the penalty then pulls toward rank one
        const PassiveProgram pp = build_passive(weights, ch, w, x, cfg, it == 0 ? 0.0 : C);
        const auto sol = conic::solve(pp.program, opts);
        ++res.solves;
        if (!sol.optimal())
            break;
        CMatrix Pf = x.Psi_f, Pb = x.Psi_b;
        const double f = penalized_value(pp, sol.values, weights, C, cfg.N_s, &Pf, &Pb);
        if (f < prev - sp.cone_tol * std::max(1.0, std::abs(prev)))
        {
            ++res.rejected;
            break;
        }
        RVector a = x.a;
        double obj = 0.0;
        for (std::size_t i = 0; i < pp.streams.size(); ++i)
        {
            a(pp.streams[i]) = pp.a[i] >= 0 ? std::clamp(sol.values(pp.a[i]), 0.0, 1.0) : 0.0;
            obj += weights(pp.streams[i]) * a(pp.streams[i]);
        }
        x.Psi_f = Pf;
        x.Psi_b = Pb;
        x.a = a;
        res.Psi_f = Pf;
        res.Psi_b = Pb;
        res.a = a;
        res.objective = obj;
        res.ok = true;
        res.trace.push_back(f);
        res.rank_gap_f = pp.Psi_f ? rank_one_gap(Pf) : 0.0;
        res.rank_gap_b = pp.Psi_b ? rank_one_gap(Pb) : 0.0;
        const bool rank_one = res.rank_gap_f <= sp.rank1_tol && res.rank_gap_b <= sp.rank1_tol;
        // a rank-one optimum of the plain relaxation also solves the penalized problem
        if (rank_one && (it == 0 || std::abs(f - prev) <= sp.eps_conv * std::max(std::abs(prev), 1e-9)))
            break;
        prev = f;
    }
    return res;
}

CVector extract_phase(const CMatrix &Psi)
{
    const auto ep = numerics::principal_eig(numerics::hermitian_part(Psi));
    CVector v = std::sqrt(std::max(ep.value, 0.0)) * ep.vector;
    // fix the global phase so that the first nonzero entry is real and positive
    for (int i = 0; i < v.size(); ++i)
        if (std::abs(v(i)) > 0.0)
        {
            v *= std::conj(v(i)) / std::abs(v(i));
            break;
        }
    return numerics::unit_modulus_project(v);
}

PhaseConfig extract_phases(const CMatrix &Psi_f, const CMatrix &Psi_b)
{
    return {extract_phase(Psi_f), extract_phase(Psi_b)};
}

// ---------------------------------------------------------------- rounding

std::optional<RoundedSchedule> schedule_subset(const std::vector<int> &subset, const std::vector<CVector> &w,
                                               const PhaseConfig &ph, const ChannelRealization &ch,
                                               const SystemConfig &cfg)
{
    RoundedSchedule rs;
    rs.a.assign(cfg.streams(), 0);
    rs.w.assign(cfg.streams(), CVector::Zero(cfg.M));
    double total = 0.0;
    for (int u : subset)
        total += w[u].squaredNorm();
    if (!subset.empty())
    {
        if (!(total > 0.0))
            return std::nullopt;
        const double s = std::sqrt(cfg.P0 / total);
        for (int u : subset)
        {
            rs.w[u] = s * w[u];
            rs.a[u] = 1;
        }
    }
    rs.snrs = phy::all_snrs(ch, cfg, ph, rs.w);
    for (int u : subset)
        if (!phy::success_check(rs.snrs(u), cfg.gamma_th))
            return std::nullopt;
    return rs;
}

RoundedSchedule round_schedule(const RVector &a_relaxed, const RVector &weights, const std::vector<CVector> &w,
                               const PhaseConfig &ph, const ChannelRealization &ch, const SystemConfig &cfg)
{
    const RVector key = weights.cwiseProduct(a_relaxed);
    std::vector<int> chosen;
    for (int u : order_by(key, active_streams(weights)))
    {
        if (static_cast<int>(chosen.size()) >= cfg.E)
            break;
        auto trial = chosen;
        trial.push_back(u);
        if (schedule_subset(trial, w, ph, ch, cfg))
            chosen = std::move(trial);
    }
    std::sort(chosen.begin(), chosen.end());
    return *schedule_subset(chosen, w, ph, ch, cfg);
}

// ------------------------------------------------------------- alternating

SlotDecision empty_decision(const SystemConfig &cfg, const PhaseConfig &ph)
{
    SlotDecision d;
    d.a.assign(cfg.streams(), 0);
    d.w.assign(cfg.streams(), CVector::Zero(cfg.M));
    d.phases = ph;
    d.snrs = RVector::Zero(cfg.streams());
    d.objective = 0.0;
    return d;
}

SlotDecision finalize(const RVector &weights, const std::vector<CVector> &w, const PhaseConfig &ph,
                      const ChannelRealization &ch, const SystemConfig &cfg)
{
    RVector a_rel;
    relaxed_value(weights, phy::all_snrs(ch, cfg, ph, w), cfg.gamma_th, cfg.E, &a_rel);
    const auto rs = round_schedule(a_rel, weights, w, ph, ch, cfg);
    SlotDecision d;
    d.a = rs.a;
    d.w = rs.w;
    d.phases = ph;
    d.snrs = rs.snrs;
    d.objective = 0.0;
    for (int u = 0; u < cfg.streams(); ++u)
        d.objective += rs.a[u] * weights(u);
    return d;
}

AoResult ao_optimize(const RVector &weights, const ChannelRealization &ch, const SystemConfig &cfg, Rng &rng)
{
    const auto &sp = cfg.solver;
    const auto start = Clock::now();
    const auto deadline = start + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(sp.slot_budget_s));
    AoResult out;
    auto &diag = out.diag;

    const InitPoint ip = init_point(weights, ch, cfg, rng);
    if (active_streams(weights).empty())
    {
        out.decision = empty_decision(cfg, ip.phases);
        return out;
    }

    std::vector<CVector> w = ip.w;
    PhaseConfig ph = ip.phases;
    auto value_at = [&](const std::vector<CVector> &wv, const PhaseConfig &pv, RVector *a = nullptr) {
        return relaxed_value(weights, phy::all_snrs(ch, cfg, pv, wv), cfg.gamma_th, cfg.E, a);
    };
    double V = value_at(w, ph);
    const double ceiling = value_ceiling(weights, cfg.E);
    diag.relaxed_trace.push_back(V);

    try
    {
        for (int round = 0; round < sp.max_ao_iters; ++round)
        {
            if (V >= ceiling)
                break;
            if (expired(deadline))
            {
                diag.timed_out = true;
                break;
            }
            const double round_start = V;
            ++diag.rounds;

            const auto act = solve_active(weights, effective_channels(ch, cfg, ph), w, cfg, deadline);
            diag.active.push_back(act);
            if (act.ok)
            {
                const double Vn = value_at(act.w, ph);
                if (Vn >= V)
                {
                    w = act.w;
                    V = Vn;
                    diag.relaxed_trace.push_back(V);
                }
                else
                    ++diag.rejected_rounds;
            }
            if (V >= ceiling)
                break;
            if (expired(deadline))
            {
                diag.timed_out = true;
                break;
            }

            PassiveExpansion x0;
            x0.Psi_f = outer(ph.psi_f);
            x0.Psi_b = outer(ph.psi_b);
            value_at(w, ph, &x0.a);
            const auto pas = solve_passive(weights, ch, w, x0, cfg, deadline);
            diag.passive.push_back(pas);
            if (pas.ok)
            {
                diag.rank_gaps.push_back(std::max(pas.rank_gap_f, pas.rank_gap_b));
                PhaseConfig cand = ph;
                cand.psi_f = extract_phase(pas.Psi_f);
                const bool any_back = (weights.tail(cfg.K).array() > 0.0).any();
                if (any_back)
                    cand.psi_b = extract_phase(pas.Psi_b);
                const double Vn = value_at(w, cand);
                if (Vn >= V)
                {
                    ph = cand;
                    V = Vn;
                    diag.relaxed_trace.push_back(V);
                }
                else
                    ++diag.rejected_rounds;
            }
            if (V - round_start <= sp.eps_conv * std::max(round_start, 1e-12))
                break;
        }
    }
    catch (const Error &)
    {
        // keep the last accepted iterate
        diag.failed = true;
    }

    out.decision = finalize(weights, w, ph, ch, cfg);
    return out;
}

} // namespace risaoi::sca
