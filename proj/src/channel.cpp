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

#include "risaoi/channel.hpp"
#include "risaoi/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace risaoi
{

double path_loss_lin(double d, double alpha, double pl_ref)
{
    if (!(d > 0.0))
        throw NonPositiveDistance("path_loss_lin: distance must be positive, got " + std::to_string(d));
    return pl_ref * std::pow(d, -alpha);
}

CVector steering_vector(int n, double theta)
{
    CVector a(n);
    const double phase = std::numbers::pi * std::sin(theta);
    for (int i = 0; i < n; ++i)
        a(i) = std::polar(1.0, phase * i);
    return a;
}

CMatrix rician_matrix(int rows, int cols, double k_factor, double beta, const CMatrix &los, Rng &rng)
{
    if (los.rows() != rows || los.cols() != cols)
        throw DimensionMismatch("rician_matrix: LoS component is " + std::to_string(los.rows()) + "x" +
                                std::to_string(los.cols()) + ", expected " + std::to_string(rows) + "x" +
                                std::to_string(cols));
    std::normal_distribution<double> g(0.0, std::sqrt(0.5));
    const double a = std::sqrt(k_factor / (k_factor + 1.0));
    const double b = std::sqrt(1.0 / (k_factor + 1.0));
    const double sb = std::sqrt(beta);
    CMatrix H(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
        {
            const double re = g(rng);
            const double im = g(rng);
            H(i, j) = sb * (a * los(i, j) + b * cplx(re, im));
        }
    return H;
}

namespace
{

double uniform_angle(Rng &rng)
{
    std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
    return u(rng);
}

CVector column(const CMatrix &m) { return m.col(0); }

} // namespace

LosComponents draw_los(const SystemConfig &cfg, Rng &rng)
{
    LosComponents los;
    const double aoa = uniform_angle(rng);
    const double aod = uniform_angle(rng);
    los.G = steering_vector(cfg.N_s, aoa) * steering_vector(cfg.M, aod).adjoint();
    for (int j = 0; j < cfg.J; ++j)
        los.h_F.push_back(steering_vector(cfg.N_s, uniform_angle(rng)));
    for (int k = 0; k < cfg.K; ++k)
        los.h_B.push_back(steering_vector(cfg.N_s, uniform_angle(rng)));
    los.g_f = steering_vector(cfg.N_s, uniform_angle(rng));
    los.g_b = steering_vector(cfg.N_s, uniform_angle(rng));
    return los;
}

ChannelRealization draw_channels(const SystemConfig &cfg, const LosComponents &los, Rng &rng)
{
    const int n = cfg.N_s;
    if (los.G.rows() != n || los.G.cols() != cfg.M || static_cast<int>(los.h_F.size()) != cfg.J ||
        static_cast<int>(los.h_B.size()) != cfg.K)
        throw DimensionMismatch("draw_channels: LoS components do not match the configuration");
    ChannelRealization ch;
    ch.G = rician_matrix(n, cfg.M, cfg.k_ar, path_loss_lin(cfg.d_ar, cfg.alpha_ar, cfg.pl_ref), los.G, rng);
    const double b_rj = path_loss_lin(cfg.d_rj, cfg.alpha_rj, cfg.pl_ref);
    for (int j = 0; j < cfg.J; ++j)
        ch.h_F.push_back(column(rician_matrix(n, 1, cfg.k_rj, b_rj, los.h_F[j], rng)));
    const double b_rk = path_loss_lin(cfg.d_rk, cfg.alpha_rk, cfg.pl_ref);
    for (int k = 0; k < cfg.K; ++k)
        ch.h_B.push_back(column(rician_matrix(n, 1, cfg.k_rk, b_rk, los.h_B[k], rng)));
    const double b_rel = path_loss_lin(cfg.d_relay, cfg.alpha_relay, cfg.pl_ref);
    ch.g_f = column(rician_matrix(n, 1, cfg.k_relay, b_rel, los.g_f, rng));
    ch.g_b = column(rician_matrix(n, 1, cfg.k_relay, b_rel, los.g_b, rng));
    return ch;
}

ChannelRealization draw_channels(const SystemConfig &cfg, Rng &rng)
{
    const LosComponents los = draw_los(cfg, rng);
    return draw_channels(cfg, los, rng);
}

RelayChannels draw_relay_los(const SystemConfig &cfg, Rng &rng)
{
    RelayChannels los;
    los.h_ar = steering_vector(cfg.M, uniform_angle(rng));
    for (int u = 0; u < cfg.streams(); ++u)
        los.h_ru.push_back(std::polar(1.0, uniform_angle(rng)));
    return los;
}

RelayChannels draw_relay_channels(const SystemConfig &cfg, const RelayChannels &los, Rng &rng)
{
    if (los.h_ar.size() != cfg.M || static_cast<int>(los.h_ru.size()) != cfg.streams())
        throw DimensionMismatch("draw_relay_channels: LoS components do not match the configuration");
    RelayChannels rc;
    rc.h_ar = column(rician_matrix(cfg.M, 1, cfg.k_ar, path_loss_lin(cfg.d_ar, cfg.alpha_ar, cfg.pl_ref),
                                   los.h_ar, rng));
    for (int u = 0; u < cfg.streams(); ++u)
    {
        const bool front = cfg.is_front(u);
        const double beta = front ? path_loss_lin(cfg.d_rj, cfg.alpha_rj, cfg.pl_ref)
                                  : path_loss_lin(cfg.d_rk, cfg.alpha_rk, cfg.pl_ref);
        const CMatrix l = CMatrix::Constant(1, 1, los.h_ru[u]);
        rc.h_ru.push_back(rician_matrix(1, 1, front ? cfg.k_rj : cfg.k_rk, beta, l, rng)(0, 0));
    }
    return rc;
}

} // namespace risaoi
