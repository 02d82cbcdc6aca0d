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

#ifndef RISAOI_CONIC_HPP
#define RISAOI_CONIC_HPP

#include "risaoi/numerics.hpp"

#include <optional>
#include <string>
#include <vector>

namespace risaoi::conic
{

struct Term
{
    int var;
    double coef;
};

/// Real affine function `constant + sum coef * x[var]` of the program variables.
class AffineExpr
{
public:
    AffineExpr() = default;
    AffineExpr(double constant) : constant_(constant) {} // NOLINT(google-explicit-constructor)

    static AffineExpr variable(int index, double coef = 1.0);

    double constant() const noexcept { return constant_; }
    const std::vector<Term> &terms() const noexcept { return terms_; }

    AffineExpr &operator+=(const AffineExpr &rhs);
    AffineExpr &operator-=(const AffineExpr &rhs);
    AffineExpr &operator*=(double k);
    void add_term(int var, double coef) { terms_.push_back({var, coef}); }

    double evaluate(const RVector &x) const;

private:
    std::vector<Term> terms_;
    double constant_ = 0.0;
};

AffineExpr operator+(AffineExpr a, const AffineExpr &b);
AffineExpr operator-(AffineExpr a, const AffineExpr &b);
AffineExpr operator-(AffineExpr a);
AffineExpr operator*(double k, AffineExpr a);
AffineExpr operator*(AffineExpr a, double k);

/// Complex scalar whose real and imaginary parts are affine in the variables.
struct ComplexAffine
{
    AffineExpr re;
    AffineExpr im;

    cplx evaluate(const RVector &x) const { return {re.evaluate(x), im.evaluate(x)}; }
};

/// Complex vector variable stored as 2n real scalars.
class ComplexVectorVar
{
public:
    int size() const noexcept { return static_cast<int>(re_.size()); }
    ComplexAffine entry(int i) const;
    /// Re(c^H v) for a constant vector c.
    AffineExpr real_inner(const CVector &c) const;
    CVector value(const RVector &x) const;
    /// Scalar variables in the order (re_0, im_0, re_1, im_1, ...).
    std::vector<AffineExpr> as_real_components() const;

private:
    friend class ConeProgram;
    std::vector<int> re_, im_;
};

/// Hermitian matrix whose entries are affine in the variables.
class HermitianAffine
{
public:
    HermitianAffine() = default;
    explicit HermitianAffine(int n);
    int dim() const noexcept { return n_; }
    /// Entry (i, j) with i <= j; the lower triangle is implied by Hermitian symmetry.
    ComplexAffine &upper(int i, int j);
    const ComplexAffine &upper(int i, int j) const;
    ComplexAffine entry(int i, int j) const;

    HermitianAffine &operator+=(const HermitianAffine &rhs);
    HermitianAffine &operator*=(double k);
    static HermitianAffine constant(const CMatrix &H);

    CMatrix evaluate(const RVector &x) const;

private:
    int n_ = 0;
    std::vector<ComplexAffine> upper_; // row-major upper triangle
};

/// Hermitian matrix variable with an optional fixed diagonal.
class HermitianVar
{
public:
    int dim() const noexcept { return n_; }
    ComplexAffine entry(int i, int j) const;
    /// Tr(X H) for a constant Hermitian H (real by construction).
    AffineExpr trace_product(const CMatrix &H) const;
    HermitianAffine as_affine() const;
    CMatrix value(const RVector &x) const;
    /// Real variables parametrizing the matrix (free diagonal, then Re/Im of the strict upper triangle).
    std::vector<int> variables() const;

private:
    friend class ConeProgram;
    int n_ = 0;
    std::optional<double> fixed_diag_;
    std::vector<int> diag_;   // variable index of X_ii, or -1 when fixed
    std::vector<int> re_, im_; // strict upper triangle, row-major
    int upper_index(int i, int j) const;
};

/// Real symmetric matrix with affine entries (upper triangle stored).
class SymmetricAffine
{
public:
    explicit SymmetricAffine(int n);
    int dim() const noexcept { return n_; }
    AffineExpr &upper(int i, int j);
    const AffineExpr &upper(int i, int j) const;

private:
    int n_;
    std::vector<AffineExpr> upper_;
};

enum class ConeKind
{
    Zero,
    NonNegative,
    SecondOrder,
    PSD
};

struct Constraint
{
    ConeKind kind;
    /// Zero / NonNegative: one entry. SecondOrder: (t, x_1, ..., x_q) with ||x|| <= t.
    std::vector<AffineExpr> exprs;
    /// PSD only.
    std::optional<SymmetricAffine> matrix;
};

/// A convex program with a linear objective over zero, nonnegative,
/// second-order and PSD cones. Complex Hermitian blocks are encoded as real
/// symmetric blocks [[Re, -Im], [Im, Re]] of doubled dimension.
class ConeProgram
{
public:
    int add_variable(const std::string &name = {});
    std::vector<int> add_variables(int n, const std::string &name = {});
    ComplexVectorVar add_complex_vector(int n, const std::string &name = {});
    HermitianVar add_hermitian(int n, std::optional<double> fixed_diagonal = std::nullopt,
                               const std::string &name = {});

    void maximize(AffineExpr objective);
    void minimize(AffineExpr objective);

    void add_equality(AffineExpr e);    ///< e == 0
    void add_nonnegative(AffineExpr e); ///< e >= 0
    void add_second_order(AffineExpr t, std::vector<AffineExpr> x);
    /// ||x||^2 <= u * v with u, v >= 0.
    void add_rotated_second_order(AffineExpr u, AffineExpr v, std::vector<AffineExpr> x);
    void add_psd(SymmetricAffine S);
    void add_hermitian_psd(const HermitianAffine &X);
    void add_hermitian_psd(const HermitianVar &X) { add_hermitian_psd(X.as_affine()); }

    int num_variables() const noexcept { return static_cast<int>(names_.size()); }
    const std::string &variable_name(int i) const { return names_.at(i); }
    const AffineExpr &objective() const noexcept { return objective_; }
    bool is_maximization() const noexcept { return maximize_; }
    const std::vector<Constraint> &constraints() const noexcept { return constraints_; }

    double objective_value(const RVector &x) const { return objective_.evaluate(x); }
    /// Largest violation of any constraint at x (cone distance measured by the
    /// most negative eigenvalue / slack).
    double max_violation(const RVector &x) const;

private:
    void check_expr(const AffineExpr &e) const;

    std::vector<std::string> names_;
    AffineExpr objective_;
    bool maximize_ = true;
    std::vector<Constraint> constraints_;
};

enum class SolveStatus
{
    Optimal,
    Infeasible,
    Unbounded,
    NumericalFailure
};

const char *to_string(SolveStatus s);

struct SolveOptions
{
    double tol = 1e-6;
    int max_iterations = 100;
};

struct ConeSolution
{
    SolveStatus status = SolveStatus::NumericalFailure;
    RVector values;
    double objective_value = 0.0;
    int iterations = 0;
    double primal_residual = 0.0;
    double dual_residual = 0.0;
    double relative_gap = 0.0;

    bool optimal() const noexcept { return status == SolveStatus::Optimal; }
};

/// Primal-dual interior-point solve (Nesterov-Todd scaling, Mehrotra
/// predictor-corrector). Never throws on numerical trouble; reports
/// NumericalFailure instead.
ConeSolution solve(const ConeProgram &p, const SolveOptions &opts = {});

inline ConeSolution solve(const ConeProgram &p, double tol)
{
    SolveOptions o;
    o.tol = tol;
    return solve(p, o);
}

} // namespace risaoi::conic

#endif
