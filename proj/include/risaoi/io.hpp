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
#ifndef RISAOI_IO_HPP
#define RISAOI_IO_HPP

#include "risaoi/config.hpp"
#include "risaoi/sim.hpp"

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace risaoi::io
{

/// Flat JSON config. An optional "preset" key selects the base values;
/// every other key overrides one field. Quantities quoted in dB carry a
/// `_db` / `_dbm` suffix (P0_dbm, gamma_th_db, chi_db, noise_dbm,
/// sigma2_o_dbm, sigma2_F_dbm, sigma2_B_dbm, pl_ref_db).
/// Throws SchemaError (unknown key, wrong type, malformed JSON) or RangeError.
SystemConfig parse_config(const std::string &text);
SystemConfig load_config(const std::filesystem::path &path);

/// All fields in linear units with a fixed key order.
std::string canonical_config(const SystemConfig &cfg);

/// 64-bit FNV-1a of the canonical config, as 16 hex digits.
std::string config_hash(const SystemConfig &cfg);
std::uint64_t fnv1a64(const std::string &bytes);

/// Shortest round-trip text for a double ("inf", "-inf", "nan" for non-finite values).
std::string format_double(double v);

/// seed,slot,stream,side,scheduled,success,snr_db,aoi
void write_trajectory_csv(std::ostream &os, const sim::Trajectory &t, const SystemConfig &cfg);
/// seed,slot,power_w,unit_modulus_error,n_scheduled,fallback
void write_decisions_csv(std::ostream &os, const sim::Trajectory &t, bool header);
/// policy,axis_value,mean_sum_aoi,ci95,n_seeds
void write_summary_csv(std::ostream &os, const sim::SweepResult &r);

extern const char *const kTrajectoryHeader;
extern const char *const kDecisionsHeader;
extern const char *const kSummaryHeader;

struct RunManifest
{
    std::string command;
    std::string config_path; // empty when only a preset was used
    std::string preset;
    std::vector<std::string> policies;
    std::string axis;
    std::vector<double> values;
    std::vector<std::uint64_t> seeds;
    std::string out_dir;
    SystemConfig config;
};

std::string tool_version();
void write_manifest(const std::filesystem::path &path, const RunManifest &m);

/// Static line plot of mean sum AoI against the axis, one polyline per policy
/// with 95% intervals as error bars.
void write_svg_plot(const std::filesystem::path &path, const sim::SweepResult &r);

} // namespace risaoi::io

#endif
