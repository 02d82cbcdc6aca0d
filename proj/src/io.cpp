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

#include "risaoi/io.hpp"
#include "risaoi/errors.hpp"
#include "risaoi/numerics.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

namespace risaoi::io
{

const char *const kTrajectoryHeader = "seed,slot,stream,side,scheduled,success,snr_db,aoi";
const char *const kDecisionsHeader = "seed,slot,power_w,unit_modulus_error,n_scheduled,fallback";
const char *const kSummaryHeader = "policy,axis_value,mean_sum_aoi,ci95,n_seeds";

namespace
{

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

struct Field
{
    const char *key;
    bool integer;
    std::function<void(SystemConfig &, double)> set;
};

template <class T> std::function<void(SystemConfig &, double)> plain(T SystemConfig::*m)
{
    return [m](SystemConfig &c, double v) { c.*m = static_cast<T>(v); };
}

template <class T> std::function<void(SystemConfig &, double)> solver(T SolverParams::*m)
{
    return [m](SystemConfig &c, double v) { c.solver.*m = static_cast<T>(v); };
}

const std::vector<Field> &fields()
{
    static const std::vector<Field> f{
        {"M", true, plain(&SystemConfig::M)},
        {"J", true, plain(&SystemConfig::J)},
        {"K", true, plain(&SystemConfig::K)},
        {"N_s", true, plain(&SystemConfig::N_s)},
        {"E", true, plain(&SystemConfig::E)},
        {"T", true, plain(&SystemConfig::T)},
        {"P0_dbm", false, [](SystemConfig &c, double v) { c.P0 = numerics::dbm_to_watts(v); }},
        {"gamma_th_db", false, [](SystemConfig &c, double v) { c.gamma_th = numerics::db_to_linear(v); }},
        {"chi_db", false, [](SystemConfig &c, double v) { c.chi = numerics::db_to_linear(v); }},
        {"noise_dbm", false,
         [](SystemConfig &c, double v) { c.sigma2_o = c.sigma2_F = c.sigma2_B = numerics::dbm_to_watts(v); }},
        {"sigma2_o_dbm", false, [](SystemConfig &c, double v) { c.sigma2_o = numerics::dbm_to_watts(v); }},
        {"sigma2_F_dbm", false, [](SystemConfig &c, double v) { c.sigma2_F = numerics::dbm_to_watts(v); }},
        {"sigma2_B_dbm", false, [](SystemConfig &c, double v) { c.sigma2_B = numerics::dbm_to_watts(v); }},
        {"d_ar", false, plain(&SystemConfig::d_ar)},
        {"d_rj", false, plain(&SystemConfig::d_rj)},
        {"d_rk", false, plain(&SystemConfig::d_rk)},
        {"d_relay", false, plain(&SystemConfig::d_relay)},
        {"alpha_ar", false, plain(&SystemConfig::alpha_ar)},
        {"alpha_rj", false, plain(&SystemConfig::alpha_rj)},
        {"alpha_rk", false, plain(&SystemConfig::alpha_rk)},
        {"alpha_relay", false, plain(&SystemConfig::alpha_relay)},
        {"pl_ref_db", false, [](SystemConfig &c, double v) { c.pl_ref = numerics::db_to_linear(v); }},
        {"k_ar", false, plain(&SystemConfig::k_ar)},
        {"k_rj", false, plain(&SystemConfig::k_rj)},
        {"k_rk", false, plain(&SystemConfig::k_rk)},
        {"k_relay", false, plain(&SystemConfig::k_relay)},
        {"p_arr", false, plain(&SystemConfig::p_arr)},
        {"max_ao_iters", true, solver(&SolverParams::max_ao_iters)},
        {"max_sca_iters", true, solver(&SolverParams::max_sca_iters)},
        {"eps_conv", false, solver(&SolverParams::eps_conv)},
        {"penalty_scale", false, solver(&SolverParams::penalty_scale)},
        {"cone_tol", false, solver(&SolverParams::cone_tol)},
        {"rank1_tol", false, solver(&SolverParams::rank1_tol)},
        {"slot_budget_s", false, solver(&SolverParams::slot_budget_s)},
    };
    return f;
}

// keys that exist in linear form internally but must be written with a unit suffix
const char *suffix_hint(const std::string &key)
{
    static const std::vector<std::pair<std::string, const char *>> hints{
        {"P0", "P0_dbm"},           {"gamma_th", "gamma_th_db"},   {"chi", "chi_db"},
        {"sigma2_o", "sigma2_o_dbm"}, {"sigma2_F", "sigma2_F_dbm"}, {"sigma2_B", "sigma2_B_dbm"},
        {"pl_ref", "pl_ref_db"},    {"noise", "noise_dbm"}};
    for (const auto &[k, h] : hints)
        if (k == key)
            return h;
    return nullptr;
}

std::string hex64(std::uint64_t v)
{
    static const char *digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, v >>= 4)
        s[i] = digits[v & 0xf];
    return s;
}

} // namespace

SystemConfig parse_config(const std::string &text)
{
    json j;
    try
    {
        j = json::parse(text);
    }
    catch (const json::parse_error &e)
    {
        throw SchemaError("<root>", std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object())
        throw SchemaError("<root>", "expected a JSON object");

    SystemConfig cfg;
    if (j.contains("preset"))
    {
        if (!j["preset"].is_string())
            throw SchemaError("preset", "expected a string");
        cfg = preset(j["preset"].get<std::string>());
    }

    // noise_dbm first so that per-receiver noise keys override it
    std::vector<std::string> keys;
    for (const auto &[k, v] : j.items())
        if (k != "preset")
            keys.push_back(k);
    std::stable_partition(keys.begin(), keys.end(), [](const std::string &k) { return k == "noise_dbm"; });

    for (const auto &k : keys)
    {
        const json &v = j[k];
        const auto &fs = fields();
        const auto it = std::find_if(fs.begin(), fs.end(), [&](const Field &f) { return k == f.key; });
        if (it == fs.end())
        {
            if (const char *h = suffix_hint(k))
                throw SchemaError(k, std::string("values in dB need an explicit unit key; use \"") + h + "\"");
            throw SchemaError(k, "unknown key");
        }
        if (it->integer)
        {
            if (!v.is_number_integer())
                throw SchemaError(k, "expected an integer");
        }
        else if (!v.is_number())
            throw SchemaError(k, "expected a number");
        it->set(cfg, v.get<double>());
    }
    validate(cfg);
    return cfg;
}

SystemConfig load_config(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open config file '" + path.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string canonical_config(const SystemConfig &c)
{
    ojson j;
    j["M"] = c.M;
    j["J"] = c.J;
    j["K"] = c.K;
    j["N_s"] = c.N_s;
    j["E"] = c.E;
    j["T"] = c.T;
    j["P0_w"] = c.P0;
    j["gamma_th"] = c.gamma_th;
    j["chi"] = c.chi;
    j["sigma2_o_w"] = c.sigma2_o;
    j["sigma2_F_w"] = c.sigma2_F;
    j["sigma2_B_w"] = c.sigma2_B;
    j["d_ar"] = c.d_ar;
    j["d_rj"] = c.d_rj;
    j["d_rk"] = c.d_rk;
    j["d_relay"] = c.d_relay;
    j["alpha_ar"] = c.alpha_ar;
    j["alpha_rj"] = c.alpha_rj;
    j["alpha_rk"] = c.alpha_rk;
    j["alpha_relay"] = c.alpha_relay;
    j["pl_ref"] = c.pl_ref;
    j["k_ar"] = c.k_ar;
    j["k_rj"] = c.k_rj;
    j["k_rk"] = c.k_rk;
    j["k_relay"] = c.k_relay;
    j["p_arr"] = c.p_arr;
    j["max_ao_iters"] = c.solver.max_ao_iters;
    j["max_sca_iters"] = c.solver.max_sca_iters;
    j["eps_conv"] = c.solver.eps_conv;
    j["penalty_scale"] = c.solver.penalty_scale;
    j["cone_tol"] = c.solver.cone_tol;
    j["rank1_tol"] = c.solver.rank1_tol;
    j["slot_budget_s"] = c.solver.slot_budget_s;
    return j.dump();
}

std::uint64_t fnv1a64(const std::string &bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : bytes)
    {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string config_hash(const SystemConfig &cfg) { return hex64(fnv1a64(canonical_config(cfg))); }

std::string format_double(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void write_trajectory_csv(std::ostream &os, const sim::Trajectory &t, const SystemConfig &cfg)
{
    os << kTrajectoryHeader << '\n';
    for (const auto &slot : t.slots)
        for (std::size_t u = 0; u < slot.streams.size(); ++u)
        {
            const auto &r = slot.streams[u];
            const double snr_db = r.snr > 0.0 ? numerics::linear_to_db(r.snr) : -INFINITY;
            os << t.seed << ',' << slot.slot << ',' << u << ',' << (cfg.is_front(static_cast<int>(u)) ? "front" : "back")
               << ',' << r.a << ',' << r.success << ',' << format_double(snr_db) << ',' << r.A << '\n';
        }
}

void write_decisions_csv(std::ostream &os, const sim::Trajectory &t, bool header)
{
    if (header)
        os << kDecisionsHeader << '\n';
    for (const auto &slot : t.slots)
    {
        int n = 0;
        for (const auto &r : slot.streams)
            n += r.a;
        os << t.seed << ',' << slot.slot << ',' << format_double(slot.power) << ','
           << format_double(slot.unit_modulus) << ',' << n << ',' << (slot.fallback ? 1 : 0) << '\n';
    }
}

void write_summary_csv(std::ostream &os, const sim::SweepResult &r)
{
    os << kSummaryHeader << '\n';
    for (const auto &row : r.rows)
        os << to_string(row.policy) << ',' << format_double(row.axis_value) << ',' << format_double(row.mean_sum_aoi)
           << ',' << format_double(row.ci95) << ',' << row.n_seeds << '\n';
}

std::string tool_version() { return "0.1.0"; }

void write_manifest(const std::filesystem::path &path, const RunManifest &m)
{
    ojson j;
    j["tool"] = "risaoi";
    j["version"] = tool_version();
    j["command"] = m.command;
    j["config_path"] = m.config_path;
    j["preset"] = m.preset;
    j["policies"] = m.policies;
    j["axis"] = {{"name", m.axis}, {"values", m.values}};
    j["seeds"] = m.seeds;
    j["out_dir"] = m.out_dir;
    j["config"] = ojson::parse(canonical_config(m.config));
    j["config_hash"] = config_hash(m.config);
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write '" + path.string() + "'");
    out << j.dump(2) << '\n';
}

void write_svg_plot(const std::filesystem::path &path, const sim::SweepResult &r)
{
    const double W = 640, Hh = 420, L = 70, R = 150, Tp = 30, B = 50;
    double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
    for (const auto &row : r.rows)
    {
        xmin = std::min(xmin, row.axis_value);
        xmax = std::max(xmax, row.axis_value);
        ymin = std::min(ymin, row.mean_sum_aoi - row.ci95);
        ymax = std::max(ymax, row.mean_sum_aoi + row.ci95);
    }
    if (r.rows.empty())
        xmin = ymin = 0.0, xmax = ymax = 1.0;
    if (xmax <= xmin)
        xmax = xmin + 1.0;
    ymin = std::min(ymin, 0.0);
    if (ymax <= ymin)
        ymax = ymin + 1.0;
    auto X = [&](double x) { return L + (x - xmin) / (xmax - xmin) * (W - L - R); };
    auto Y = [&](double y) { return Hh - B - (y - ymin) / (ymax - ymin) * (Hh - Tp - B); };

    static const char *colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << Hh << "\">\n";
    s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s << "<line x1=\"" << L << "\" y1=\"" << Y(ymin) << "\" x2=\"" << W - R << "\" y2=\"" << Y(ymin)
      << "\" stroke=\"black\"/>\n";
    s << "<line x1=\"" << L << "\" y1=\"" << Y(ymin) << "\" x2=\"" << L << "\" y2=\"" << Tp << "\" stroke=\"black\"/>\n";
    s << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << Hh - 10 << "\" text-anchor=\"middle\">" << r.axis << "</text>\n";
    s << "<text x=\"15\" y=\"" << Hh / 2 << "\" transform=\"rotate(-90 15 " << Hh / 2
      << ")\" text-anchor=\"middle\">mean sum AoI</text>\n";
    for (double v : r.values)
        s << "<text x=\"" << X(v) << "\" y=\"" << Y(ymin) + 18 << "\" text-anchor=\"middle\" font-size=\"11\">"
          << format_double(v) << "</text>\n";
    for (int k = 0; k <= 4; ++k)
    {
        const double v = ymin + (ymax - ymin) * k / 4.0;
        s << "<text x=\"" << L - 6 << "\" y=\"" << Y(v) + 4 << "\" text-anchor=\"end\" font-size=\"11\">"
          << static_cast<long>(std::lround(v)) << "</text>\n";
    }

    std::vector<PolicyKind> seen;
    for (const auto &row : r.rows)
        if (std::find(seen.begin(), seen.end(), row.policy) == seen.end())
            seen.push_back(row.policy);
    for (std::size_t p = 0; p < seen.size(); ++p)
    {
        const char *col = colors[p % 5];
        std::ostringstream pts;
        for (const auto &row : r.rows)
        {
            if (row.policy != seen[p])
                continue;
            pts << X(row.axis_value) << ',' << Y(row.mean_sum_aoi) << ' ';
            s << "<line x1=\"" << X(row.axis_value) << "\" y1=\"" << Y(row.mean_sum_aoi - row.ci95) << "\" x2=\""
              << X(row.axis_value) << "\" y2=\"" << Y(row.mean_sum_aoi + row.ci95) << "\" stroke=\"" << col
              << "\"/>\n";
            s << "<circle cx=\"" << X(row.axis_value) << "\" cy=\"" << Y(row.mean_sum_aoi) << "\" r=\"3\" fill=\""
              << col << "\"/>\n";
        }
        s << "<polyline fill=\"none\" stroke=\"" << col << "\" points=\"" << pts.str() << "\"/>\n";
        s << "<text x=\"" << W - R + 10 << "\" y=\"" << Tp + 20 * (p + 1) << "\" fill=\"" << col << "\">"
          << to_string(seen[p]) << "</text>\n";
    }
    s << "</svg>\n";
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write '" + path.string() + "'");
    out << s.str();
}

} // namespace risaoi::io
