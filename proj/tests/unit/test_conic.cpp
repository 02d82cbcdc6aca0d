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

#include "risaoi/conic.hpp"
#include "risaoi/numerics.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace risaoi;
using namespace risaoi::conic;

namespace
{

CMatrix random_hermitian(int n, std::mt19937_64 &rng)
{
    std::normal_distribution<double> g(0.0, 1.0);
    CMatrix B(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            B(i, j) = {g(rng), g(rng)};
    return 0.5 * (B + B.adjoint());
}

} // namespace

TEST_CASE("one-dimensional LP")
{
    ConeProgram p;
    const int x = p.add_variable("x");
    p.maximize(AffineExpr::variable(x, -1.0));
    p.add_nonnegative(AffineExpr::variable(x) - 1.0);
    const auto sol = solve(p);
    REQUIRE(sol.optimal());
    CHECK(sol.values(x) == Catch::Approx(1.0).margin(1e-6));
    CHECK(sol.objective_value == Catch::Approx(-1.0).margin(1e-6));
}

TEST_CASE("second-order cone norm")
{
    ConeProgram p;
    const int t = p.add_variable("t");
    p.minimize(AffineExpr::variable(t));
    p.add_second_order(AffineExpr::variable(t), {AffineExpr(3.0), AffineExpr(4.0)});
    const auto sol = solve(p);
    REQUIRE(sol.optimal());
    CHECK(sol.values(t) == Catch::Approx(5.0).margin(1e-6));
}

TEST_CASE("linear objective over the unit ball")
{
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial)
    {
        const int n = 2 + trial % 7;
        RVector c(n);
        for (int i = 0; i < n; ++i)
            c(i) = g(rng);
        ConeProgram p;
        const auto xs = p.add_variables(n, "x");
        AffineExpr obj;
        std::vector<AffineExpr> body;
        for (int i = 0; i < n; ++i)
        {
            obj.add_term(xs[i], c(i));
            body.push_back(AffineExpr::variable(xs[i]));
        }
        p.minimize(obj);
        p.add_second_order(AffineExpr(1.0), body);
        const auto sol = solve(p, 1e-8);
        REQUIRE(sol.optimal());
        CHECK(sol.objective_value == Catch::Approx(-c.norm()).margin(1e-6));
        CHECK((sol.values + c / c.norm()).norm() <= 1e-3);
    }
}

TEST_CASE("rotated second-order cone")
{
    ConeProgram p;
    const int u = p.add_variable("u");
    p.minimize(AffineExpr::variable(u));
    p.add_rotated_second_order(AffineExpr::variable(u), AffineExpr(1.0), {AffineExpr(3.0)});
    const auto sol = solve(p);
    REQUIRE(sol.optimal());
    CHECK(sol.values(u) == Catch::Approx(9.0).margin(1e-5));
}

TEST_CASE("largest eigenvalue through a Hermitian PSD constraint")
{
    std::mt19937_64 rng(77);
    for (int n : {2, 3, 5, 8})
    {
        const CMatrix H = random_hermitian(n, rng);
        ConeProgram p;
        const int lam = p.add_variable("lambda");
        // lambda I - H >= 0, minimize lambda
        HermitianAffine X = HermitianAffine::constant(-H);
        for (int i = 0; i < n; ++i)
            X.upper(i, i).re += AffineExpr::variable(lam);
        p.add_hermitian_psd(X);
        p.minimize(AffineExpr::variable(lam));
        const auto sol = solve(p);
        REQUIRE(sol.optimal());
        const double expect = numerics::principal_eig(H).value;
        CHECK(std::abs(sol.values(lam) - expect) <= 1e-6 * std::max(1.0, std::abs(expect)));
    }
}

TEST_CASE("maximize lambda with lambda I below H")
{
    std::mt19937_64 rng(78);
    const int n = 4;
    const CMatrix H = random_hermitian(n, rng);
    ConeProgram p;
    const int lam = p.add_variable("lambda");
    HermitianAffine X = HermitianAffine::constant(H);
    for (int i = 0; i < n; ++i)
        X.upper(i, i).re -= AffineExpr::variable(lam);
    p.add_hermitian_psd(X);
    p.maximize(AffineExpr::variable(lam));
    const auto sol = solve(p);
    REQUIRE(sol.optimal());
    const double expect = numerics::hermitian_eigenvalues(H).minCoeff();
    CHECK(std::abs(sol.values(lam) - expect) <= 1e-6 * std::max(1.0, std::abs(expect)));
}

TEST_CASE("Hermitian encoding round-trips")
{
    std::mt19937_64 rng(9);
    const int n = 4;
    CMatrix B = random_hermitian(n, rng);
    const CMatrix H = B * B + CMatrix::Identity(n, n);
    ConeProgram p;
    const HermitianVar X = p.add_hermitian(n, std::nullopt, "X");
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
        {
            const ComplexAffine e = X.entry(i, j);
            p.add_equality(e.re - H(i, j).real());
            if (i != j)
                p.add_equality(e.im - H(i, j).imag());
        }
    p.add_hermitian_psd(X);
    p.maximize(AffineExpr(0.0));
    const auto sol = solve(p, 1e-10);
    REQUIRE(sol.optimal());
    const CMatrix back = X.value(sol.values);
    CHECK((back - H).cwiseAbs().maxCoeff() <= 1e-9);
}

TEST_CASE("trace products on Hermitian variables")
{
    std::mt19937_64 rng(10);
    const int n = 3;
    const CMatrix H = random_hermitian(n, rng);
    ConeProgram p;
    const HermitianVar X = p.add_hermitian(n, 1.0, "X");
    RVector x = RVector::Zero(p.num_variables());
    std::normal_distribution<double> g(0.0, 1.0);
    for (int v : X.variables())
        x(v) = g(rng);
    const CMatrix Xv = X.value(x);
    CHECK(std::abs(X.trace_product(H).evaluate(x) - std::real((Xv * H).trace())) <= 1e-12);
    for (int i = 0; i < n; ++i)
        CHECK(Xv(i, i) == cplx(1.0, 0.0));
}

TEST_CASE("semidefinite relaxation of a unit-modulus quadratic")
{
    // max Tr(X R) over X >= 0 with unit diagonal; for rank-one R = r r^H the
    // optimum is (sum |r_i|)^2.
    std::mt19937_64 rng(12);
    std::normal_distribution<double> g(0.0, 1.0);
    const int n = 6;
    CVector r(n);
    for (int i = 0; i < n; ++i)
        r(i) = {g(rng), g(rng)};
    const CMatrix R = r * r.adjoint();
    ConeProgram p;
    const HermitianVar X = p.add_hermitian(n, 1.0, "X");
    p.add_hermitian_psd(X);
    p.maximize(X.trace_product(R));
    const auto sol = solve(p, 1e-8);
    REQUIRE(sol.optimal());
    const double expect = std::pow(r.cwiseAbs().sum(), 2);
    CHECK(sol.objective_value == Catch::Approx(expect).epsilon(1e-6));
    CHECK(p.max_violation(sol.values) <= 1e-6);
}

TEST_CASE("reported objective matches re-evaluation")
{
    ConeProgram p;
    const auto v = p.add_variables(3, "v");
    p.maximize(AffineExpr::variable(v[0], 2.0) + AffineExpr::variable(v[1]) - AffineExpr::variable(v[2]) + 0.5);
    p.add_second_order(AffineExpr(2.0), {AffineExpr::variable(v[0]), AffineExpr::variable(v[1])});
    p.add_nonnegative(AffineExpr::variable(v[2]) - 0.25);
    p.add_equality(AffineExpr::variable(v[0]) - AffineExpr::variable(v[1], 2.0));
    const auto sol = solve(p);
    REQUIRE(sol.optimal());
    CHECK(std::abs(sol.objective_value - p.objective_value(sol.values)) <= 1e-8);
    CHECK(p.max_violation(sol.values) <= 1e-6);
}

TEST_CASE("infeasible and unbounded programs")
{
    {
        ConeProgram p;
        const int x = p.add_variable();
        p.maximize(AffineExpr::variable(x));
        p.add_nonnegative(AffineExpr::variable(x) - 1.0);
        p.add_nonnegative(-AffineExpr::variable(x));
        CHECK(solve(p).status == SolveStatus::Infeasible);
    }
    {
        ConeProgram p;
        const int x = p.add_variable();
        const int t = p.add_variable();
        p.maximize(AffineExpr::variable(x));
        p.add_second_order(AffineExpr(1.0), {AffineExpr::variable(t)});
        p.add_second_order(AffineExpr::variable(t) + 0.5, {AffineExpr::variable(x)});
        CHECK(solve(p).status == SolveStatus::Optimal);
    }
    {
        ConeProgram p;
        const int x = p.add_variable();
        p.maximize(AffineExpr::variable(x));
        p.add_nonnegative(AffineExpr::variable(x));
        CHECK(solve(p).status == SolveStatus::Unbounded);
    }
}
