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
#include "risaoi/io.hpp"
#include "risaoi/oracle.hpp"
#include "risaoi/sim.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace risaoi;

namespace
{

struct Common
{
    std::string config_path;
    std::string preset;
    std::string out = "out";
    int seeds = 1;
    int jobs = 0;
};

void add_common(CLI::App *cmd, Common &c)
{
    cmd->add_option("--config", c.config_path, "flat JSON config file")->check(CLI::ExistingFile);
    cmd->add_option("--preset", c.preset, "default, fig3a, fig3b or fig3c");
    cmd->add_option("--seeds", c.seeds, "run seeds 1..N")->check(CLI::PositiveNumber);
    cmd->add_option("--out", c.out, "output directory");
    cmd->add_option("--jobs", c.jobs, "worker threads (0 = available parallelism)")->check(CLI::NonNegativeNumber);
}

SystemConfig resolve_config(const Common &c)
{
    SystemConfig cfg;
    if (!c.config_path.empty())
    {
        cfg = io::load_config(c.config_path);
        if (!c.preset.empty())
            std::cerr << "warning: --preset ignored, the config file selects its own preset\n";
    }
    else
        cfg = preset(c.preset.empty() ? "default" : c.preset);
    for (const auto &w : config_warnings(cfg))
        std::cerr << "warning: " << w << "\n";
    return cfg;
}

std::vector<std::uint64_t> seed_list(int n)
{
    std::vector<std::uint64_t> s;
    for (int i = 1; i <= n; ++i)
        s.push_back(static_cast<std::uint64_t>(i));
    return s;
}

std::vector<PolicyKind> parse_policies(const std::vector<std::string> &names)
{
    std::vector<PolicyKind> out;
    for (const auto &n : names)
        out.push_back(parse_policy(n));
    return out;
}

std::string axis_tag(double v)
{
    std::string s = io::format_double(v);
    for (auto &ch : s)
        if (ch == '.')
            ch = 'p';
    return s;
}

void write_file(const fs::path &p, const std::string &body)
{
    std::ofstream f(p, std::ios::binary);
    if (!f)
        throw Error("cannot write " + p.string());
    f << body;
    if (!f)
        throw Error("write failed for " + p.string());
}

int cmd_simulate(const Common &c, const std::string &policy_name)
{
    const SystemConfig cfg = resolve_config(c);
    const PolicyKind policy = parse_policy(policy_name);
    const auto seeds = seed_list(c.seeds);
    fs::create_directories(c.out);

    // one value on a pseudo-axis reuses the sweep worker pool
    std::vector<sim::Trajectory> runs(seeds.size());
    const auto res = sim::run_sweep(cfg, {policy}, "", {0.0}, seeds, c.jobs,
                                    [&](const sim::EpisodeKey &k, const sim::Trajectory &t) { runs[k.seed - 1] = t; });

    std::ostringstream dec;
    int fallbacks = 0;
    for (std::size_t i = 0; i < runs.size(); ++i)
    {
        std::ostringstream tr;
        io::write_trajectory_csv(tr, runs[i], cfg);
        write_file(fs::path(c.out) / ("trajectory_" + to_string(policy) + "_seed" + std::to_string(seeds[i]) + ".csv"),
                   tr.str());
        io::write_decisions_csv(dec, runs[i], i == 0);
        fallbacks += runs[i].fallbacks;
        std::cout << to_string(policy) << " seed " << seeds[i] << ": sum AoI " << runs[i].sum_aoi << "\n";
    }
    write_file(fs::path(c.out) / ("decisions_" + to_string(policy) + ".csv"), dec.str());

    io::RunManifest m{"simulate", c.config_path, c.preset, {to_string(policy)}, "", {}, seeds, c.out, cfg};
    io::write_manifest(fs::path(c.out) / "manifest.json", m);
    std::cout << "mean " << res.rows.at(0).mean_sum_aoi << " +/- " << res.rows.at(0).ci95 << " over " << seeds.size()
              << " seeds\n";
    if (fallbacks > 0)
        std::cerr << "note: " << fallbacks << " slots used the idle fallback decision\n";
    return 0;
}

int cmd_sweep(const Common &c, const std::vector<std::string> &policy_names, const std::string &axis,
              const std::vector<double> &values, bool plot, bool trajectories)
{
    const SystemConfig cfg = resolve_config(c);
    const auto policies = parse_policies(policy_names);
    const auto seeds = seed_list(c.seeds);
    fs::create_directories(c.out);

    sim::EpisodeSink sink;
    if (trajectories)
    {
        fs::create_directories(fs::path(c.out) / "trajectories");
        sink = [&](const sim::EpisodeKey &k, const sim::Trajectory &t) {
            SystemConfig at = cfg;
            apply_axis(at, axis, k.axis_value);
            const std::string stem = to_string(k.policy) + "_" + axis + axis_tag(k.axis_value) + "_seed" +
                                     std::to_string(k.seed);
            std::ostringstream tr, dec;
            io::write_trajectory_csv(tr, t, at);
            io::write_decisions_csv(dec, t, true);
            write_file(fs::path(c.out) / "trajectories" / ("trajectory_" + stem + ".csv"), tr.str());
            write_file(fs::path(c.out) / "trajectories" / ("decisions_" + stem + ".csv"), dec.str());
        };
    }
    const auto res = sim::run_sweep(cfg, policies, axis, values, seeds, c.jobs, sink);

    std::ostringstream sum;
    io::write_summary_csv(sum, res);
    write_file(fs::path(c.out) / "summary.csv", sum.str());
    std::cout << sum.str();
    if (plot)
        io::write_svg_plot(fs::path(c.out) / "summary.svg", res);

    io::RunManifest m{"sweep", c.config_path, c.preset, policy_names, axis, values, seeds, c.out, cfg};
    io::write_manifest(fs::path(c.out) / "manifest.json", m);
    return 0;
}

int cmd_oracle(const oracle::Options &o)
{
    bool ok = true;
    for (const auto &r : oracle::run_all(o))
    {
        std::printf("%-20s %s  %s  (%.2f s)\n", r.name.c_str(), r.pass ? "PASS" : "FAIL", r.detail.c_str(), r.seconds);
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}

int cmd_validate(const std::string &path)
{
    const SystemConfig cfg = io::load_config(path);
    for (const auto &w : config_warnings(cfg))
        std::cout << "warning: " << w << "\n";
    std::cout << "ok " << io::config_hash(cfg) << "\n";
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"AoI scheduling and RIS beamforming simulator"};
    app.set_version_flag("--version", io::tool_version());
    app.require_subcommand(1);

    Common sim_opts;
    std::string policy = "proposed";
    auto *simulate = app.add_subcommand("simulate", "run episodes of one policy and write trajectories");
    add_common(simulate, sim_opts);
    simulate->add_option("--policy", policy, "proposed, fd-af, rps or rbf");

    Common sweep_opts;
    std::vector<std::string> policies{"proposed"};
    std::string axis;
    std::vector<double> values;
    bool plot = false, trajectories = false;
    auto *sweep = app.add_subcommand("sweep", "sweep one config axis over several policies");
    add_common(sweep, sweep_opts);
    sweep->add_option("--policies", policies, "comma-separated policies")->delimiter(',');
    sweep->add_option("--axis", axis, "gamma_th, N_s, P0, chi, ...")->required();
    sweep->add_option("--values", values, "comma-separated axis values (dB axes in dB)")->delimiter(',')->required();
    sweep->add_flag("--plot", plot, "also write summary.svg");
    sweep->add_flag("--trajectories", trajectories, "also write per-episode CSVs");

    oracle::Options oopts;
    std::string mutate = "none";
    auto *orc = app.add_subcommand("oracle", "run the brute-force consistency checks");
    orc->add_option("--seed", oopts.seed, "random instance seed");
    orc->add_option("--instances", oopts.instances, "random instances per check")->check(CLI::PositiveNumber);
    orc->add_option("--mutate", mutate, "inject a known defect: none or snr-denominator");

    std::string cfg_path;
    auto *val = app.add_subcommand("validate-config", "check a config file and print its hash");
    val->add_option("path", cfg_path, "config file")->required()->check(CLI::ExistingFile);

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (*simulate)
            return cmd_simulate(sim_opts, policy);
        if (*sweep)
        {
            const auto &axes = sweep_axes();
            if (std::find(axes.begin(), axes.end(), axis) == axes.end())
                throw Error("unknown axis '" + axis + "'");
            return cmd_sweep(sweep_opts, policies, axis, values, plot, trajectories);
        }
        if (*orc)
        {
            oopts.mutation = oracle::parse_mutation(mutate);
            return cmd_oracle(oopts);
        }
        if (*val)
            return cmd_validate(cfg_path);
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
