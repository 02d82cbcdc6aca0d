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
#include "risaoi/errors.hpp"

#include <algorithm>
#include <cmath>

namespace risaoi::conic
{

// ---------------------------------------------------------------- AffineExpr

AffineExpr AffineExpr::variable(int index, double coef)
{
    AffineExpr e;
    e.terms_.push_back({index, coef});
    return e;
}

AffineExpr &AffineExpr::operator+=(const AffineExpr &rhs)
{
    constant_ += rhs.constant_;
    terms_.insert(terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
    return *this;
}

AffineExpr &AffineExpr::operator-=(const AffineExpr &rhs)
{
    constant_ -= rhs.constant_;
    terms_.reserve(terms_.size() + rhs.terms_.size());
    for (const auto &t : rhs.terms_)
        terms_.push_back({t.var, -t.coef});
    return *this;
}

AffineExpr &AffineExpr::operator*=(double k)
{
    constant_ *= k;
    for (auto &t : terms_)
        t.coef *= k;
    return *this;
}

double AffineExpr::evaluate(const RVector &x) const
{
    double v = constant_;
    for (const auto &t : terms_)
        v += t.coef * x(t.var);
    return v;
}

AffineExpr operator+(AffineExpr a, const AffineExpr &b) { return a += b; }
AffineExpr operator-(AffineExpr a, const AffineExpr &b) { return a -= b; }
AffineExpr operator-(AffineExpr a) { return a *= -1.0; }
AffineExpr operator*(double k, AffineExpr a) { return a *= k; }
AffineExpr operator*(AffineExpr a, double k) { return a *= k; }

// ---------------------------------------------------------- ComplexVectorVar

ComplexAffine ComplexVectorVar::entry(int i) const
{
    return {AffineExpr::variable(re_.at(i)), AffineExpr::variable(im_.at(i))};
}

AffineExpr ComplexVectorVar::real_inner(const CVector &c) const
{
    if (c.size() != size())
        throw DimensionMismatch("real_inner: size mismatch");
    // Re(conj(c_i) (x_i + j y_i)) = Re(c_i) x_i + Im(c_i) y_i
    AffineExpr e;
    for (int i = 0; i < size(); ++i)
    {
        e.add_term(re_[i], c(i).real());
        e.add_term(im_[i], c(i).imag());
    }
    return e;
}

CVector ComplexVectorVar::value(const RVector &x) const
{
    CVector v(size());
    for (int i = 0; i < size(); ++i)
        v(i) = {x(re_[i]), x(im_[i])};
    return v;
}

std::vector<AffineExpr> ComplexVectorVar::as_real_components() const
{
    std::vector<AffineExpr> out;
    out.reserve(2 * re_.size());
    for (std::size_t i = 0; i < re_.size(); ++i)
    {
        out.push_back(AffineExpr::variable(re_[i]));
        out.push_back(AffineExpr::variable(im_[i]));
    }
    return out;
}

// ----------------------------------------------------------- HermitianAffine

static std::size_t tri_index(int n, int i, int j)
{
    // row-major upper triangle including the diagonal, i <= j
    return static_cast<std::size_t>(i) * n - static_cast<std::size_t>(i) * (i - 1) / 2 + (j - i);
}

HermitianAffine::HermitianAffine(int n) : n_(n), upper_(static_cast<std::size_t>(n) * (n + 1) / 2) {}

ComplexAffine &HermitianAffine::upper(int i, int j)
{
    if (i > j || j >= n_ || i < 0)
        throw DimensionMismatch("HermitianAffine::upper: index out of range");
    return upper_[tri_index(n_, i, j)];
}

const ComplexAffine &HermitianAffine::upper(int i, int j) const
{
    if (i > j || j >= n_ || i < 0)
        throw DimensionMismatch("HermitianAffine::upper: index out of range");
    return upper_[tri_index(n_, i, j)];
}

ComplexAffine HermitianAffine::entry(int i, int j) const
{
    if (i <= j)
        return upper(i, j);
    const auto &u = upper(j, i);
    return {u.re, -u.im};
}

HermitianAffine &HermitianAffine::operator+=(const HermitianAffine &rhs)
{
    if (rhs.n_ != n_)
        throw DimensionMismatch("HermitianAffine: size mismatch");
    for (std::size_t k = 0; k < upper_.size(); ++k)
    {
        upper_[k].re += rhs.upper_[k].re;
        upper_[k].im += rhs.upper_[k].im;
    }
    return *this;
}

HermitianAffine &HermitianAffine::operator*=(double k)
{
    for (auto &e : upper_)
    {
        e.re *= k;
        e.im *= k;
    }
    return *this;
}

HermitianAffine HermitianAffine::constant(const CMatrix &H)
{
    numerics::require_hermitian(H);
    const int n = static_cast<int>(H.rows());
    HermitianAffine out(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
        {
            const cplx h = 0.5 * (H(i, j) + std::conj(H(j, i)));
            out.upper(i, j) = {AffineExpr(h.real()), AffineExpr(i == j ? 0.0 : h.imag())};
        }
    return out;
}

CMatrix HermitianAffine::evaluate(const RVector &x) const
{
    CMatrix X(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j)
        {
            const cplx v = upper(i, j).evaluate(x);
            X(i, j) = i == j ? cplx(v.real(), 0.0) : v;
            X(j, i) = std::conj(X(i, j));
        }
    return X;
}

// -------------------------------------------------------------- HermitianVar

int HermitianVar::upper_index(int i, int j) const
{
    // strict upper triangle, row-major, i < j
    return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

ComplexAffine HermitianVar::entry(int i, int j) const
{
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw DimensionMismatch("HermitianVar::entry: index out of range");
    if (i == j)
    {
        if (diag_[i] < 0)
            return {AffineExpr(*fixed_diag_), AffineExpr()};
        return {AffineExpr::variable(diag_[i]), AffineExpr()};
    }
    if (i < j)
    {
        const int k = upper_index(i, j);
        return {AffineExpr::variable(re_[k]), AffineExpr::variable(im_[k])};
    }
    const int k = upper_index(j, i);
    return {AffineExpr::variable(re_[k]), AffineExpr::variable(im_[k], -1.0)};
}

AffineExpr HermitianVar::trace_product(const CMatrix &H) const
{
    if (H.rows() != n_ || H.cols() != n_)
        throw DimensionMismatch("trace_product: size mismatch");
    // Tr(X H) = sum_i X_ii H_ii + sum_{i<j} 2 Re(X_ij conj(H_ij))
    AffineExpr e;
    for (int i = 0; i < n_; ++i)
    {
        const double hii = H(i, i).real();
        if (diag_[i] < 0)
            e += AffineExpr(*fixed_diag_ * hii);
        else
            e.add_term(diag_[i], hii);
    }
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
        {
            const cplx h = 0.5 * (H(i, j) + std::conj(H(j, i)));
            const int k = upper_index(i, j);
            e.add_term(re_[k], 2.0 * h.real());
            e.add_term(im_[k], 2.0 * h.imag());
        }
    return e;
}

HermitianAffine HermitianVar::as_affine() const
{
    HermitianAffine out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j)
            out.upper(i, j) = entry(i, j);
    return out;
}

CMatrix HermitianVar::value(const RVector &x) const
{
    CMatrix X(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j)
        {
            X(i, j) = entry(i, j).evaluate(x);
            X(j, i) = std::conj(X(i, j));
        }
    return X;
}

std::vector<int> HermitianVar::variables() const
{
    std::vector<int> v;
    for (int d : diag_)
        if (d >= 0)
            v.push_back(d);
    for (std::size_t k = 0; k < re_.size(); ++k)
    {
        v.push_back(re_[k]);
        v.push_back(im_[k]);
    }
    return v;
}

// ----------------------------------------------------------- SymmetricAffine

SymmetricAffine::SymmetricAffine(int n) : n_(n), upper_(static_cast<std::size_t>(n) * (n + 1) / 2) {}

AffineExpr &SymmetricAffine::upper(int i, int j)
{
    if (i > j || j >= n_ || i < 0)
        throw DimensionMismatch("SymmetricAffine::upper: index out of range");
    return upper_[tri_index(n_, i, j)];
}

const AffineExpr &SymmetricAffine::upper(int i, int j) const
{
    if (i > j || j >= n_ || i < 0)
        throw DimensionMismatch("SymmetricAffine::upper: index out of range");
    return upper_[tri_index(n_, i, j)];
}

// --------------------------------------------------------------- ConeProgram

int ConeProgram::add_variable(const std::string &name)
{
    names_.push_back(name.empty() ? "x" + std::to_string(names_.size()) : name);
    return static_cast<int>(names_.size()) - 1;
}

std::vector<int> ConeProgram::add_variables(int n, const std::string &name)
{
    std::vector<int> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i)
        out.push_back(add_variable(name.empty() ? std::string() : name + "[" + std::to_string(i) + "]"));
    return out;
}

ComplexVectorVar ConeProgram::add_complex_vector(int n, const std::string &name)
{
    ComplexVectorVar v;
    for (int i = 0; i < n; ++i)
    {
        v.re_.push_back(add_variable(name.empty() ? std::string() : "re " + name + "[" + std::to_string(i) + "]"));
        v.im_.push_back(add_variable(name.empty() ? std::string() : "im " + name + "[" + std::to_string(i) + "]"));
    }
    return v;
}

HermitianVar ConeProgram::add_hermitian(int n, std::optional<double> fixed_diagonal, const std::string &name)
{
    HermitianVar X;
    X.n_ = n;
    X.fixed_diag_ = fixed_diagonal;
    const std::string base = name.empty() ? "X" : name;
    for (int i = 0; i < n; ++i)
        X.diag_.push_back(fixed_diagonal ? -1 : add_variable(base + "(" + std::to_string(i) + "," + std::to_string(i) + ")"));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
        {
            const std::string idx = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
            X.re_.push_back(add_variable("re " + base + idx));
            X.im_.push_back(add_variable("im " + base + idx));
        }
    return X;
}

void ConeProgram::check_expr(const AffineExpr &e) const
{
    for (const auto &t : e.terms())
        if (t.var < 0 || t.var >= num_variables())
            throw DimensionMismatch("expression references undeclared variable " + std::to_string(t.var));
}

void ConeProgram::maximize(AffineExpr objective)
{
    check_expr(objective);
    objective_ = std::move(objective);
    maximize_ = true;
}

void ConeProgram::minimize(AffineExpr objective)
{
    check_expr(objective);
    objective_ = std::move(objective);
    maximize_ = false;
}

void ConeProgram::add_equality(AffineExpr e)
{
    check_expr(e);
    constraints_.push_back({ConeKind::Zero, {std::move(e)}, std::nullopt});
}

void ConeProgram::add_nonnegative(AffineExpr e)
{
    check_expr(e);
    constraints_.push_back({ConeKind::NonNegative, {std::move(e)}, std::nullopt});
}

void ConeProgram::add_second_order(AffineExpr t, std::vector<AffineExpr> x)
{
    check_expr(t);
    std::vector<AffineExpr> all;
    all.reserve(x.size() + 1);
    all.push_back(std::move(t));
    for (auto &e : x)
    {
        check_expr(e);
        all.push_back(std::move(e));
    }
    constraints_.push_back({ConeKind::SecondOrder, std::move(all), std::nullopt});
}

void ConeProgram::add_rotated_second_order(AffineExpr u, AffineExpr v, std::vector<AffineExpr> x)
{
    // ||x||^2 <= u v, u,v >= 0  <=>  ||(2x, u - v)|| <= u + v
    for (auto &e : x)
        e *= 2.0;
    x.push_back(u - v);
    add_second_order(u + v, std::move(x));
}

void ConeProgram::add_psd(SymmetricAffine S)
{
    for (int i = 0; i < S.dim(); ++i)
        for (int j = i; j < S.dim(); ++j)
            check_expr(S.upper(i, j));
    constraints_.push_back({ConeKind::PSD, {}, std::move(S)});
}

void ConeProgram::add_hermitian_psd(const HermitianAffine &X)
{
    // [[Re X, -Im X], [Im X, Re X]] is PSD iff X is PSD.
    const int n = X.dim();
    SymmetricAffine S(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
        {
            const auto &e = X.upper(i, j);
            S.upper(i, j) = e.re;
            S.upper(n + i, n + j) = e.re;
        }
    for (int i = 0; i < n; ++i)
        for (int q = 0; q < n; ++q)
        {
            if (i == q)
                continue;
            S.upper(i, n + q) = -X.entry(i, q).im;
        }
    add_psd(std::move(S));
}

double ConeProgram::max_violation(const RVector &x) const
{
    double worst = 0.0;
    for (const auto &c : constraints_)
    {
        switch (c.kind)
        {
        case ConeKind::Zero:
            worst = std::max(worst, std::abs(c.exprs[0].evaluate(x)));
            break;
        case ConeKind::NonNegative:
            worst = std::max(worst, -c.exprs[0].evaluate(x));
            break;
        case ConeKind::SecondOrder:
        {
            double nrm2 = 0.0;
            for (std::size_t k = 1; k < c.exprs.size(); ++k)
            {
                const double v = c.exprs[k].evaluate(x);
                nrm2 += v * v;
            }
            worst = std::max(worst, std::sqrt(nrm2) - c.exprs[0].evaluate(x));
            break;
        }
        case ConeKind::PSD:
        {
            const auto &S = *c.matrix;
            RMatrix M(S.dim(), S.dim());
            for (int i = 0; i < S.dim(); ++i)
                for (int j = i; j < S.dim(); ++j)
                    M(i, j) = M(j, i) = S.upper(i, j).evaluate(x);
            Eigen::SelfAdjointEigenSolver<RMatrix> es(M, Eigen::EigenvaluesOnly);
            worst = std::max(worst, -es.eigenvalues()(0));
            break;
        }
        }
    }
    return worst;
}

const char *to_string(SolveStatus s)
{
    switch (s)
    {
    case SolveStatus::Optimal:
        return "optimal";
    case SolveStatus::Infeasible:
        return "infeasible";
    case SolveStatus::Unbounded:
        return "unbounded";
    case SolveStatus::NumericalFailure:
        return "numerical-failure";
    }
    return "unknown";
}

} // namespace risaoi::conic
