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

#include "risaoi/errors.hpp"
#include "risaoi/numerics.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace risaoi;

namespace
{

CMatrix random_complex(int r, int c, std::mt19937_64 &rng)
{
    std::normal_distribution<double> g(0.0, 1.0);
    CMatrix M(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            M(i, j) = {g(rng), g(rng)};
    return M;
}

CMatrix random_psd(int n, std::mt19937_64 &rng)
{
    const CMatrix B = random_complex(n, n, rng);
    return B * B.adjoint();
}

// Plain power iteration, run long enough to converge to machine precision.
double power_iteration(const CMatrix &H, CVector &v)
{
    v = CVector::Ones(H.rows()).normalized();
    double lam = 0.0;
    for (int it = 0; it < 20000; ++it)
    {
        CVector w = H * v;
        const double next = w.norm();
        v = w / next;
        if (std::abs(next - lam) <= 1e-15 * next && it > 50)
        {
            lam = next;
            break;
        }
        lam = next;
    }
    return std::real(v.dot(H * v));
}

} // namespace

TEST_CASE("principal_eig on identity and diagonal matrices")
{
    const auto id = numerics::principal_eig(CMatrix::Identity(2, 2));
    CHECK(id.value == Catch::Approx(1.0).margin(1e-14));
    CHECK(id.vector.norm() == Catch::Approx(1.0).margin(1e-12));

    CMatrix D = CMatrix::Zero(2, 2);
    D(0, 0) = 3.0;
    D(1, 1) = 1.0;
    const auto ep = numerics::principal_eig(D);
    CHECK(ep.value == Catch::Approx(3.0).margin(1e-14));
    CHECK(std::abs(ep.vector(0)) == Catch::Approx(1.0).margin(1e-12));
    CHECK(std::abs(ep.vector(1)) <= 1e-12);
}

TEST_CASE("principal_eig agrees with power iteration on a random PSD matrix")
{
    std::mt19937_64 rng(11);
    const CMatrix H = random_psd(4, rng);
    CVector v;
    const double lam = power_iteration(H, v);
    const auto ep = numerics::principal_eig(H);
    CHECK(std::abs(ep.value - lam) <= 1e-12 * std::max(1.0, lam));
    // eigenvectors agree up to a global phase
    CHECK(std::abs(std::abs(ep.vector.dot(v)) - 1.0) <= 1e-10);
}

TEST_CASE("principal_eig residual on random Hermitian instances")
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> size(1, 32);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial)
    {
        const int n = size(rng);
        const CMatrix B = random_complex(n, n, rng);
        const CMatrix H = 0.5 * (B + B.adjoint());
        const auto ep = numerics::principal_eig(H);
        const double res = (H * ep.vector - ep.value * ep.vector).norm() / std::max(1.0, ep.value);
        worst = std::max(worst, res);
        REQUIRE(std::abs(ep.vector.norm() - 1.0) <= 1e-12);
    }
    CHECK(worst <= 1e-8);
}

TEST_CASE("principal_eig rejects non-Hermitian input")
{
    CMatrix H = CMatrix::Identity(2, 2);
    H(0, 1) = 1.0;
    CHECK_THROWS_AS(numerics::principal_eig(H), NonHermitian);
}

TEST_CASE("nuclear_and_spectral norms")
{
    const auto [nuc, spec] = numerics::nuclear_and_spectral(CMatrix::Identity(3, 3));
    CHECK(nuc == Catch::Approx(3.0).margin(1e-14));
    CHECK(spec == Catch::Approx(1.0).margin(1e-14));

    std::mt19937_64 rng(5);
    CVector psi = numerics::unit_modulus_project(random_complex(6, 1, rng).col(0));
    const CMatrix R = psi * psi.adjoint();
    const auto [n1, s1] = numerics::nuclear_and_spectral(R);
    CHECK(n1 == Catch::Approx(6.0).margin(1e-12));
    CHECK(s1 == Catch::Approx(6.0).margin(1e-12));

    const CMatrix P = random_psd(5, rng);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(P);
    const RVector ev = es.eigenvalues();
    const auto [n2, s2] = numerics::nuclear_and_spectral(P);
    CHECK(std::abs(n2 - ev.cwiseAbs().sum()) <= 1e-10 * ev.cwiseAbs().sum());
    CHECK(std::abs(s2 - ev.cwiseAbs().maxCoeff()) <= 1e-10 * s2);
    CHECK(std::abs(n2 - std::real(P.trace())) <= 1e-10 * n2);

    CMatrix bad = CMatrix::Identity(2, 2);
    bad(1, 1) = -1.0;
    CHECK_THROWS_AS(numerics::nuclear_and_spectral(bad), NotPSD);
}

TEST_CASE("unit_modulus_project")
{
    CVector v(2);
    v << cplx(2.0, 0.0), cplx(0.0, -3.0);
    const CVector p = numerics::unit_modulus_project(v);
    CHECK(std::abs(p(0) - cplx(1.0, 0.0)) <= 1e-15);
    CHECK(std::abs(p(1) - cplx(0.0, -1.0)) <= 1e-15);

    CVector z(2);
    z << cplx(0.0, 0.0), cplx(1.0, 0.0);
    const CVector pz = numerics::unit_modulus_project(z);
    CHECK(pz(0) == cplx(1.0, 0.0));
    CHECK(pz(1) == cplx(1.0, 0.0));

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial)
    {
        const CVector r = random_complex(16, 1, rng).col(0);
        const CVector q = numerics::unit_modulus_project(r);
        for (int i = 0; i < r.size(); ++i)
        {
            const cplx expect = std::polar(1.0, std::arg(r(i)));
            REQUIRE(std::abs(q(i) - expect) <= 1e-14);
        }
        const CVector qq = numerics::unit_modulus_project(q);
        REQUIRE((qq.array() == q.array()).all());
        REQUIRE(numerics::unit_modulus_error(q) <= 1e-14);
    }
}

TEST_CASE("decibel conversions")
{
    CHECK(numerics::db_to_linear(-30.0) == Catch::Approx(1e-3));
    CHECK(numerics::dbm_to_watts(30.0) == Catch::Approx(1.0));
    CHECK(numerics::dbm_to_watts(-80.0) == Catch::Approx(1e-11));
    CHECK(numerics::linear_to_db(100.0) == Catch::Approx(20.0));
}
