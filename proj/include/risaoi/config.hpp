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

#ifndef RISAOI_CONFIG_HPP
#define RISAOI_CONFIG_HPP

#include <string>
#include <vector>

namespace risaoi
{

/// Knobs of the per-slot optimizer.
struct SolverParams
{
    int max_ao_iters = 10;
    int max_sca_iters = 15;
    double eps_conv = 1e-3;   // relative objective change
    double penalty_scale = 1e3; // C_f = C_b = penalty_scale * max weight
    double cone_tol = 1e-6;
    double rank1_tol = 1e-2;
    double slot_budget_s = 30.0; // wall-clock guard per slot
};

/// Scenario constants. All quantities are linear (W, ratios, metres); the
/// config loader converts the dB / dBm values found in files.
struct SystemConfig
{
    int M = 4;   // AP antennas
    int J = 2;   // front (outdoor) users
    int K = 2;   // back (indoor) users
    int N_s = 30; // elements per RIS face
    int E = 2;   // orthogonal channels per slot
    int T = 100; // slots per episode

    double P0 = 1.0;          // W
    double gamma_th = 100.0;  // linear SNR threshold
    double chi = 100.0;       // relay power gain
    double sigma2_o = 1e-11;  // relay noise, W
    double sigma2_F = 1e-11;  // front-user noise, W
    double sigma2_B = 1e-11;  // back-user noise, W

    double d_ar = 7.0;
    double d_rj = 20.0;
    double d_rk = 3.0;
    double d_relay = 0.5; // RIS face to horn antenna
    double alpha_ar = 3.5;
    double alpha_rj = 2.2;
    double alpha_rk = 2.0;
    double alpha_relay = 2.0;
    double pl_ref = 1e-3; // gain at 1 m

    double k_ar = 3.0; // Rician K-factors (linear)
    double k_rj = 3.0;
    double k_rk = 3.0;
    double k_relay = 3.0;

    double p_arr = 0.5;

    SolverParams solver;

    int streams() const noexcept { return J + K; }
    bool is_front(int stream) const noexcept { return stream < J; }
};

/// Defaults; the preset names are "default", "fig3a", "fig3b" and "fig3c".
SystemConfig preset(const std::string &name);
const std::vector<std::string> &preset_names();

/// Throws RangeError on an inadmissible value.
void validate(const SystemConfig &cfg);

/// Warnings for admissible but suspicious values (e.g. E > J + K).
std::vector<std::string> config_warnings(const SystemConfig &cfg);

/// Sweep axes: "gamma_th" (dB), "N_s", "P0" (dBm), "chi" (dB), "d_ar" (m).
const std::vector<std::string> &sweep_axes();
void apply_axis(SystemConfig &cfg, const std::string &axis, double value);

} // namespace risaoi

#endif
