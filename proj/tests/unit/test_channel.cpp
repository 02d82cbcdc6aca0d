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

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace risaoi;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("path loss examples", "[channel]")
{
    CHECK_THAT(path_loss_lin(1.0, 3.5, 1e-3), WithinRel(1e-3, 1e-14));
    CHECK_THAT(path_loss_lin(1.0, 2.2, 1e-3), WithinRel(1e-3, 1e-14));
    CHECK_THAT(path_loss_lin(10.0, 2.0, 1e-3), WithinRel(1e-5, 1e-14));
    // 7^-3.5 = 1 / (343 sqrt 7), evaluated in extended precision
    const long double ref = 1e-3L / (343.0L * std::sqrt(7.0L));
    CHECK_THAT(path_loss_lin(7.0, 3.5, 1e-3), WithinRel(static_cast<double>(ref), 1e-13));
    CHECK_THROWS_AS(path_loss_lin(0.0, 2.0, 1e-3), NonPositiveDistance);
    CHECK_THROWS_AS(path_loss_lin(-1.0, 2.0, 1e-3), NonPositiveDistance);
}

TEST_CASE("steering vector has unit-modulus entries", "[channel]")
{
    const CVector a = steering_vector(5, 0.3);
    for (int n = 0; n < 5; ++n)
    {
        CHECK_THAT(std::abs(a(n)), WithinAbs(1.0, 1e-14));
        CHECK_THAT(std::arg(a(n) * std::conj(a(0))),
                   WithinAbs(std::remainder(std::numbers::pi * n * std::sin(0.3), 2.0 * std::numbers::pi), 1e-12));
    }
}

TEST_CASE("Rician draw limits and shape", "[channel]")
{
    Rng rng(3);
    CMatrix los(2, 3);
    los << cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0.6, 0.8), cplx(1, 0), cplx(0, -1);
    const CMatrix H = rician_matrix(2, 3, 1e12, 4.0, los, rng);
    CHECK(H.rows() == 2);
    CHECK(H.cols() == 3);
    CHECK((H - 2.0 * los).norm() / (2.0 * los.norm()) < 1e-5);
}

TEST_CASE("Rayleigh entries have unit variance", "[channel]")
{
    Rng rng(11);
    const CMatrix zero = CMatrix::Zero(100, 1000);
    const CMatrix H = rician_matrix(100, 1000, 0.0, 1.0, zero, rng);
    const double var = H.squaredNorm() / static_cast<double>(H.size());
    CHECK_THAT(var, WithinAbs(1.0, 0.03));
    CHECK(std::abs(H.mean()) < 0.01);
}

TEST_CASE("slot channels have the configured shapes", "[channel]")
{
    SystemConfig cfg;
    cfg.N_s = 8;
    Rng rng(5);
    const auto ch = draw_channels(cfg, rng);
    CHECK(ch.G.rows() == 8);
    CHECK(ch.G.cols() == 4);
    REQUIRE(ch.h_F.size() == 2);
    REQUIRE(ch.h_B.size() == 2);
    for (const auto &h : ch.h_F)
        CHECK(h.size() == 8);
    for (const auto &h : ch.h_B)
        CHECK(h.size() == 8);
    CHECK(ch.g_f.size() == 8);
    CHECK(ch.g_b.size() == 8);

    const auto rc = draw_relay_channels(cfg, draw_relay_los(cfg, rng), rng);
    CHECK(rc.h_ar.size() == 4);
    CHECK(rc.h_ru.size() == 4);
}

TEST_CASE("same seed gives the same realization", "[channel]")
{
    SystemConfig cfg;
    cfg.N_s = 6;
    Rng r1(make_rng(9, Stream::Channel, 4)), r2(make_rng(9, Stream::Channel, 4)), r3(make_rng(9, Stream::Channel, 5));
    const auto a = draw_channels(cfg, r1), b = draw_channels(cfg, r2), c = draw_channels(cfg, r3);
    CHECK(a.G == b.G);
    CHECK(a.h_B[1] == b.h_B[1]);
    CHECK(a.g_b == b.g_b);
    CHECK(a.G != c.G);
}

TEST_CASE("channel power scales with the reference path loss", "[channel]")
{
    SystemConfig cfg;
    cfg.N_s = 4;
    SystemConfig cfg2 = cfg;
    cfg2.pl_ref = 2.0 * cfg.pl_ref;
    Rng rng(21);
    const auto los = draw_los(cfg, rng);
    double e1 = 0.0, e2 = 0.0;
    const int n = 10000;
    for (int i = 0; i < n; ++i)
    {
        e1 += draw_channels(cfg, los, rng).G.squaredNorm();
        e2 += draw_channels(cfg2, los, rng).G.squaredNorm();
    }
    CHECK_THAT(e2 / e1, WithinAbs(2.0, 0.06));
    // expected power is beta * rows * cols for unit-modulus LoS
    const double beta = path_loss_lin(cfg.d_ar, cfg.alpha_ar, cfg.pl_ref);
    CHECK_THAT(e1 / n, WithinRel(beta * cfg.N_s * cfg.M, 0.03));
}
