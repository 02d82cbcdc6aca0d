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

#include "risaoi/config.hpp"
#include "risaoi/errors.hpp"
#include "risaoi/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace risaoi
{

SystemConfig preset(const std::string &name)
{
    SystemConfig cfg;
    if (name.empty() || name == "default")
        return cfg;
    cfg.P0 = numerics::dbm_to_watts(30.0);
    cfg.chi = numerics::db_to_linear(20.0);
    if (name == "fig3a")
    {
        cfg.N_s = 30;
        cfg.d_ar = 5.0;
        cfg.gamma_th = numerics::db_to_linear(20.0);
    }
    else if (name == "fig3b")
    {
        cfg.N_s = 30;
        cfg.gamma_th = numerics::db_to_linear(20.0);
    }
    else if (name == "fig3c")
    {
        cfg.N_s = 20;
        cfg.gamma_th = numerics::db_to_linear(28.0);
    }
    else
    {
        throw SchemaError("preset", "unknown preset '" + name + "'");
    }
    return cfg;
}

const std::vector<std::string> &preset_names()
{
    static const std::vector<std::string> names{"default", "fig3a", "fig3b", "fig3c"};
    return names;
}

namespace
{

void require(bool ok, const char *field, const std::string &what)
{
    if (!ok)
        throw RangeError(field, what);
}

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }
bool finite_pos(double v) { return std::isfinite(v) && v > 0.0; }

} // namespace

void validate(const SystemConfig &c)
{
    require(c.M >= 1, "M", "must be >= 1");
    require(c.J >= 0, "J", "must be >= 0");
    require(c.K >= 0, "K", "must be >= 0");
    require(c.J + c.K >= 1, "J", "need at least one stream");
    require(c.N_s >= 1, "N_s", "must be >= 1");
    require(c.E >= 1, "E", "must be >= 1");
    require(c.T >= 1, "T", "must be >= 1");
    require(finite_nonneg(c.P0), "P0", "must be a finite non-negative power");
    require(finite_nonneg(c.gamma_th), "gamma_th", "must be finite and non-negative");
    require(finite_pos(c.chi), "chi", "must be positive");
    require(finite_pos(c.sigma2_o), "sigma2_o", "must be positive");
    require(finite_pos(c.sigma2_F), "sigma2_F", "must be positive");
    require(finite_pos(c.sigma2_B), "sigma2_B", "must be positive");
    require(finite_pos(c.d_ar), "d_ar", "must be positive");
    require(finite_pos(c.d_rj), "d_rj", "must be positive");
    require(finite_pos(c.d_rk), "d_rk", "must be positive");
    require(finite_pos(c.d_relay), "d_relay", "must be positive");
    require(finite_nonneg(c.alpha_ar), "alpha_ar", "must be >= 0");
    require(finite_nonneg(c.alpha_rj), "alpha_rj", "must be >= 0");
    require(finite_nonneg(c.alpha_rk), "alpha_rk", "must be >= 0");
    require(finite_nonneg(c.alpha_relay), "alpha_relay", "must be >= 0");
    require(finite_pos(c.pl_ref), "pl_ref", "must be positive");
    require(finite_nonneg(c.k_ar), "k_ar", "must be >= 0");
    require(finite_nonneg(c.k_rj), "k_rj", "must be >= 0");
    require(finite_nonneg(c.k_rk), "k_rk", "must be >= 0");
    require(finite_nonneg(c.k_relay), "k_relay", "must be >= 0");
    require(c.p_arr >= 0.0 && c.p_arr <= 1.0, "p_arr", "must lie in [0, 1]");

    const auto &s = c.solver;
    require(s.max_ao_iters >= 1, "max_ao_iters", "must be >= 1");
    require(s.max_sca_iters >= 1, "max_sca_iters", "must be >= 1");
    require(s.eps_conv > 0.0 && s.eps_conv < 1.0, "eps_conv", "must lie in (0, 1)");
    require(finite_pos(s.penalty_scale), "penalty_scale", "must be positive");
    require(finite_pos(s.cone_tol), "cone_tol", "must be positive");
    require(finite_pos(s.rank1_tol), "rank1_tol", "must be positive");
    require(finite_pos(s.slot_budget_s), "slot_budget_s", "must be positive");
}

std::vector<std::string> config_warnings(const SystemConfig &c)
{
    std::vector<std::string> w;
    if (c.E > c.J + c.K)
        w.push_back("E exceeds the number of streams; the channel budget never binds");
    if (c.N_s > 64)
        w.push_back("N_s above 64 makes the phase-shift programs slow");
    return w;
}

const std::vector<std::string> &sweep_axes()
{
    static const std::vector<std::string> axes{"gamma_th", "N_s", "P0", "chi", "d_ar"};
    return axes;
}

void apply_axis(SystemConfig &cfg, const std::string &axis, double value)
{
    if (axis == "gamma_th")
        cfg.gamma_th = numerics::db_to_linear(value);
    else if (axis == "N_s")
    {
        if (value < 1.0 || value != std::floor(value))
            throw RangeError("N_s", "sweep value must be a positive integer");
        cfg.N_s = static_cast<int>(value);
    }
    else if (axis == "P0")
        cfg.P0 = numerics::dbm_to_watts(value);
    else if (axis == "chi")
        cfg.chi = numerics::db_to_linear(value);
    else if (axis == "d_ar")
        cfg.d_ar = value;
    else
        throw SchemaError("axis", "unknown sweep axis '" + axis + "'");
    validate(cfg);
}

} // namespace risaoi
