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

#ifndef RISAOI_SCA_HPP
#define RISAOI_SCA_HPP

#include "risaoi/channel.hpp"
#include "risaoi/conic.hpp"
#include "risaoi/config.hpp"
#include "risaoi/phy.hpp"
#include "risaoi/rng.hpp"

#include <chrono>
#include <optional>
#include <vector>

namespace risaoi::sca
{

using Clock = std::chrono::steady_clock;

// ---------------------------------------------------------------- helpers

/// Vectors g_u with SNR_u(w) = |g_u^H w|^2 under fixed phases (front first).
std::vector<CVector> effective_channels(const ChannelRealization &ch, const SystemConfig &cfg,
                                        const PhaseConfig &ph);

/// First-order expansion 2 Re((h^H w0)^* h^H w) - |h^H w0|^2 of |h^H w|^2 at w0.
double linearized_power(const CVector &h, const CVector &w0, const CVector &w);

/// Fractional schedule: a_u <= min(1, snr_u / gamma_th), sum a <= E, filled in
/// decreasing weight order (ties to the lower index). Returns the value sum w a.
double relaxed_value(const RVector &weights, const RVector &snrs, double gamma_th, int E, RVector *a = nullptr);

/// Largest achievable relaxed value: sum of the E largest positive weights.
double value_ceiling(const RVector &weights, int E);

// ------------------------------------------------------------- init point

struct InitPoint
{
    RVector a;
    std::vector<CVector> w;
    PhaseConfig phases;
};

/// Random unit-modulus phases, matched-filter beamformers toward each
/// available stream splitting P0 equally, and a = 0.
InitPoint init_point(const RVector &weights, const ChannelRealization &ch, const SystemConfig &cfg, Rng &rng);

// ------------------------------------------------------ active subproblem

struct ActiveProgram
{
    conic::ConeProgram program;
    std::vector<int> streams;                 // streams with a positive weight
    std::vector<conic::ComplexVectorVar> w;   // normalized beamformers w / sqrt(P0)
    std::vector<int> a;
    double weight_scale = 1.0;                // objective = weight_scale * program objective
};

/// Beamforming / scheduling program around prev_w with the phases folded
/// into `gains` (see effective_channels).
ActiveProgram build_active(const RVector &weights, const std::vector<CVector> &gains,
                           const std::vector<CVector> &prev_w, const SystemConfig &cfg);

struct SubproblemResult
{
    bool ok = false;                 // at least one accepted iterate
    int solves = 0;
    int rejected = 0;                // iterates refused by the monotonicity safeguard
    std::vector<double> trace;       // accepted objective values (normalized program units)
    double tolerance = 0.0;          // cone tolerance the trace should be judged with
};

struct ActiveResult : SubproblemResult
{
    std::vector<CVector> w;
    RVector a;
    double objective = 0.0; // sum weights * a
};

ActiveResult solve_active(const RVector &weights, const std::vector<CVector> &gains,
                          const std::vector<CVector> &w0, const SystemConfig &cfg,
                          std::optional<Clock::time_point> deadline = std::nullopt);

// ---------------------------------------------------------- DC bounds

/// Upper bound of scale * x * a through
///   x a = 1/4 [(c x + a/c)^2 - (c x - a/c)^2]
/// with the concave part replaced by its tangent at (x0, a0).
struct BilinearBound
{
    double scale = 0.0;
    double c = 1.0;
    double x0 = 0.0;
    double a0 = 0.0;

    double exact(double x, double a) const { return scale * x * a; }
    double convex_part(double x, double a) const;  // scale/4 (c x + a/c)^2
    double tangent(double x, double a) const;      // -scale/4 times the tangent of (c x - a/c)^2
    double bound(double x, double a) const { return convex_part(x, a) + tangent(x, a); }
};

/// Relay-noise term chi sigma2_o gamma_th eta a Tr(Psi_b H) around (prev_Psi_b, prev_a).
BilinearBound dc_sigma_bound(const CMatrix &prev_Psi_b, double prev_a, const CMatrix &H_kB, double chi,
                             double sigma2_o, double gamma_th, int eta);

/// Upper bound of -chi Tr(Psi_b M(Psi_f)), M(Psi_f) = Ht Psi_f^T Ht^H, from
///   -Tr(B M) = 1/2 ||c B - M/c||^2 - c^2/2 ||B||^2 - 1/(2 c^2) ||M||^2
/// with both concave terms linearized at the previous iterates.
struct SignalBound
{
    double chi = 0.0;
    double c = 1.0;
    CMatrix Psi_b0;
    CMatrix M0;
    CMatrix Htilde;

    CMatrix M(const CMatrix &Psi_f) const { return Htilde * Psi_f.transpose() * Htilde.adjoint(); }
    double exact(const CMatrix &Psi_b, const CMatrix &Psi_f) const;
    double bound(const CMatrix &Psi_b, const CMatrix &Psi_f) const;
};

/// `balance` <= 0 selects c^2 = ||M0||_F / ||Psi_b0||_F.
SignalBound dc_signal_bound(const CMatrix &prev_Psi_b, const CMatrix &prev_Psi_f, const CMatrix &Htilde, double chi,
                            double balance = 0.0);

/// ||Psi||_* - (||Psi0||_2 + Tr(u u^H (Psi - Psi0))), u the principal eigenvector of Psi0.
double spectral_penalty(const CMatrix &Psi, const CMatrix &prev_Psi);

/// (||Psi||_* - ||Psi||_2) / ||Psi||_2.
double rank_one_gap(const CMatrix &Psi);

// ----------------------------------------------------- passive subproblem

struct PassiveExpansion
{
    CMatrix Psi_f;
    CMatrix Psi_b;
    RVector a;
};

struct PassiveProgram
{
    conic::ConeProgram program;
    std::vector<int> streams;
    std::vector<int> a;
    std::optional<conic::HermitianVar> Psi_f;
    std::optional<conic::HermitianVar> Psi_b;
    double weight_scale = 1.0;
};

/// Phase-shift / scheduling SDP with fixed beamformers. `penalty` is the
/// rank-one penalty weight in normalized objective units (0 for the plain
/// semidefinite relaxation).
PassiveProgram build_passive(const RVector &weights, const ChannelRealization &ch, const std::vector<CVector> &w,
                             const PassiveExpansion &x0, const SystemConfig &cfg, double penalty);

struct PassiveResult : SubproblemResult
{
    CMatrix Psi_f;
    CMatrix Psi_b;
    RVector a;
    double objective = 0.0; // sum weights * a at the last accepted iterate
    double rank_gap_f = 0.0;
    double rank_gap_b = 0.0;
};

PassiveResult solve_passive(const RVector &weights, const ChannelRealization &ch, const std::vector<CVector> &w,
                            const PassiveExpansion &x0, const SystemConfig &cfg,
                            std::optional<Clock::time_point> deadline = std::nullopt);

/// Unit-modulus phases from the principal eigenvector of each Psi.
PhaseConfig extract_phases(const CMatrix &Psi_f, const CMatrix &Psi_b);
CVector extract_phase(const CMatrix &Psi);

// ------------------------------------------------------------- rounding

struct RoundedSchedule
{
    std::vector<int> a;
    std::vector<CVector> w; // scheduled beamformers rescaled to the full budget, others zero
    RVector snrs;
};

/// Greedy by weight * a_relaxed (ties to the lower index): a candidate is
/// kept when, after rescaling the kept beamformers to total power P0, every
/// kept stream meets gamma_th. Stops at E streams.
RoundedSchedule round_schedule(const RVector &a_relaxed, const RVector &weights, const std::vector<CVector> &w,
                               const PhaseConfig &ph, const ChannelRealization &ch, const SystemConfig &cfg);

/// Same power rule for an explicit stream set; empty optional when some member misses gamma_th.
std::optional<RoundedSchedule> schedule_subset(const std::vector<int> &subset, const std::vector<CVector> &w,
                                               const PhaseConfig &ph, const ChannelRealization &ch,
                                               const SystemConfig &cfg);

// ---------------------------------------------------------- alternating

struct AoDiagnostics
{
    std::vector<double> relaxed_trace; // accepted relaxed values, one per AO stage
    std::vector<SubproblemResult> active;
    std::vector<SubproblemResult> passive;
    std::vector<double> rank_gaps;     // rank-one gap of every passive solve's last iterate
    int rounds = 0;
    int rejected_rounds = 0;
    bool timed_out = false;
    bool failed = false;
};

struct AoResult
{
    SlotDecision decision;
    AoDiagnostics diag;
};

AoResult ao_optimize(const RVector &weights, const ChannelRealization &ch, const SystemConfig &cfg, Rng &rng);

/// Decision with nothing scheduled (always feasible).
SlotDecision empty_decision(const SystemConfig &cfg, const PhaseConfig &ph);

/// Final decision from a relaxed state: rounding, SNRs and objective.
SlotDecision finalize(const RVector &weights, const std::vector<CVector> &w, const PhaseConfig &ph,
                      const ChannelRealization &ch, const SystemConfig &cfg);

} // namespace risaoi::sca

#endif
