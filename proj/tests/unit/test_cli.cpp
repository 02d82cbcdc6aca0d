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

#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace
{

int run(const std::string &args)
{
    const std::string cmd = std::string(RISAOI_CLI) + " " + args + " > /dev/null 2>&1";
    const int st = std::system(cmd.c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string slurp(const fs::path &p)
{
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int count_lines(const fs::path &p)
{
    std::ifstream f(p);
    std::string line;
    int n = 0;
    while (std::getline(f, line))
        ++n;
    return n;
}

struct TempDir
{
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("risaoi_cli_" + std::to_string(std::rand())))
    {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("simulate writes one trajectory per seed and a manifest", "[cli]")
{
    TempDir d;
    std::ofstream(d.path / "c.json") << R"({"preset": "fig3a", "N_s": 4, "T": 5})";
    REQUIRE(run("simulate --config " + (d.path / "c.json").string() + " --policy proposed --seeds 3 --out " +
                (d.path / "out").string()) == 0);
    int traj = 0;
    for (const auto &e : fs::directory_iterator(d.path / "out"))
        traj += e.path().filename().string().rfind("trajectory_", 0) == 0 ? 1 : 0;
    CHECK(traj == 3);
    CHECK(fs::exists(d.path / "out" / "manifest.json"));
    CHECK(count_lines(d.path / "out" / "trajectory_proposed_seed2.csv") == 1 + 5 * 4);
}

TEST_CASE("sweep writes one summary row per policy and value, reproducibly", "[cli]")
{
    TempDir d;
    std::ofstream(d.path / "c.json") << R"({"preset": "fig3a", "N_s": 3, "T": 5})";
    const std::string base = "sweep --config " + (d.path / "c.json").string() +
                             " --axis gamma_th --values 10,15,20 --policies proposed,rps --seeds 2 --trajectories --out ";
    REQUIRE(run(base + (d.path / "a").string()) == 0);
    REQUIRE(run(base + (d.path / "b").string() + " --jobs 2") == 0);
    CHECK(count_lines(d.path / "a" / "summary.csv") == 1 + 6);
    CHECK(slurp(d.path / "a" / "summary.csv") == slurp(d.path / "b" / "summary.csv"));
    int files = 0;
    for (const auto &e : fs::directory_iterator(d.path / "a" / "trajectories"))
    {
        ++files;
        CHECK(slurp(e.path()) == slurp(d.path / "b" / "trajectories" / e.path().filename()));
    }
    CHECK(files == 2 * 12);
}

TEST_CASE("oracle passes and catches the injected denominator flip", "[cli][oracle]")
{
    CHECK(run("oracle") == 0);
    CHECK(run("oracle --mutate snr-denominator") != 0);
}

TEST_CASE("bad inputs give a nonzero exit", "[cli]")
{
    TempDir d;
    std::ofstream(d.path / "bad.json") << R"({"gamma_th": 20})";
    std::ofstream(d.path / "ok.json") << R"({"gamma_th_db": 20})";
    CHECK(run("validate-config " + (d.path / "ok.json").string()) == 0);
    CHECK(run("validate-config " + (d.path / "bad.json").string()) != 0);
    CHECK(run("sweep --axis bogus --values 1 --out " + (d.path / "x").string()) != 0);
    CHECK(run("simulate --policy nope --out " + (d.path / "y").string()) != 0);
    CHECK(run("frobnicate") != 0);
}
