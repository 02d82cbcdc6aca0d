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

// Infeasible-start primal-dual interior-point method for
//
//     minimize    c'x
//     subject to  s = D x + d,  s in K,   A x = b
//
// with K a product of nonnegative orthants, second-order cones and PSD
// cones. Nesterov-Todd scaling and Mehrotra predictor-corrector steps.
// The reduced KKT system is solved through the dense normal matrix
// H = D' W^{-1} W^{-T} D, which is assembled cone by cone; for PSD cones the
// entries are Tr(F_k P F_l P) with P the inverse NT scaling matrix, so
// variables that touch only a few matrix entries stay cheap.

#include "risaoi/conic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace risaoi::conic
{
namespace
{

struct PsdEntry
{
    int i;
    int j;
    double coef;
};

struct SocBlock
{
    std::vector<int> vars;
    RMatrix D; // q x |vars|
    RVector d;
    RMatrix DtD;
};

struct PsdBlock
{
    int n = 0;
    RMatrix F0;
    std::vector<int> vars;
    std::vector<std::vector<PsdEntry>> F; // per local variable, upper-triangle entries
};

struct Standard
{
    int n = 0;
    RVector c;
    double c0 = 0.0; // objective constant (minimization sense)
    RMatrix A;
    RVector b;
    RMatrix Dl; // nonnegative rows
    RVector dl;
    std::vector<SocBlock> soc;
    std::vector<PsdBlock> psd;
    int degree = 0;
};

struct ConeVec
{
    RVector lp;
    std::vector<RVector> soc;
    std::vector<RMatrix> psd;
};

ConeVec zeros_like(const Standard &st)
{
    ConeVec v;
    v.lp = RVector::Zero(st.Dl.rows());
    for (const auto &b : st.soc)
        v.soc.push_back(RVector::Zero(b.D.rows()));
    for (const auto &b : st.psd)
        v.psd.push_back(RMatrix::Zero(b.n, b.n));
    return v;
}

ConeVec identity_like(const Standard &st)
{
    ConeVec v = zeros_like(st);
    v.lp.setOnes();
    for (auto &s : v.soc)
        s(0) = 1.0;
    for (auto &m : v.psd)
        m.setIdentity();
    return v;
}

double dot(const ConeVec &a, const ConeVec &b)
{
    double r = a.lp.dot(b.lp);
    for (std::size_t k = 0; k < a.soc.size(); ++k)
        r += a.soc[k].dot(b.soc[k]);
    for (std::size_t k = 0; k < a.psd.size(); ++k)
        r += a.psd[k].cwiseProduct(b.psd[k]).sum();
    return r;
}

double norm(const ConeVec &a) { return std::sqrt(dot(a, a)); }

void axpy(double alpha, const ConeVec &x, ConeVec &y)
{
    y.lp += alpha * x.lp;
    for (std::size_t k = 0; k < x.soc.size(); ++k)
        y.soc[k] += alpha * x.soc[k];
    for (std::size_t k = 0; k < x.psd.size(); ++k)
        y.psd[k] += alpha * x.psd[k];
}

ConeVec combine(double a, const ConeVec &x, double b, const ConeVec &y)
{
    ConeVec r = x;
    r.lp = a * x.lp + b * y.lp;
    for (std::size_t k = 0; k < x.soc.size(); ++k)
        r.soc[k] = a * x.soc[k] + b * y.soc[k];
    for (std::size_t k = 0; k < x.psd.size(); ++k)
        r.psd[k] = a * x.psd[k] + b * y.psd[k];
    return r;
}

// ------------------------------------------------------------ standard form

Standard to_standard(const ConeProgram &p)
{
    Standard st;
    st.n = p.num_variables();
    st.c = RVector::Zero(st.n);
    const double sign = p.is_maximization() ? -1.0 : 1.0;
    for (const auto &t : p.objective().terms())
        st.c(t.var) += sign * t.coef;
    st.c0 = sign * p.objective().constant();

    std::vector<const AffineExpr *> eq, lp;
    for (const auto &con : p.constraints())
    {
        switch (con.kind)
        {
        case ConeKind::Zero:
            eq.push_back(&con.exprs[0]);
            break;
        case ConeKind::NonNegative:
            lp.push_back(&con.exprs[0]);
            break;
        case ConeKind::SecondOrder:
        {
            SocBlock blk;
            std::map<int, int> local;
            for (const auto &e : con.exprs)
                for (const auto &t : e.terms())
                    local.emplace(t.var, 0);
            for (auto &[var, idx] : local)
            {
                idx = static_cast<int>(blk.vars.size());
                blk.vars.push_back(var);
            }
            const int q = static_cast<int>(con.exprs.size());
            blk.D = RMatrix::Zero(q, static_cast<Eigen::Index>(blk.vars.size()));
            blk.d = RVector::Zero(q);
            for (int r = 0; r < q; ++r)
            {
                blk.d(r) = con.exprs[r].constant();
                for (const auto &t : con.exprs[r].terms())
                    blk.D(r, local[t.var]) += t.coef;
            }
            st.soc.push_back(std::move(blk));
            break;
        }
        case ConeKind::PSD:
        {
            const auto &S = *con.matrix;
            PsdBlock blk;
            blk.n = S.dim();
            blk.F0 = RMatrix::Zero(blk.n, blk.n);
            std::map<int, int> local;
            for (int i = 0; i < blk.n; ++i)
                for (int j = i; j < blk.n; ++j)
                {
                    const auto &e = S.upper(i, j);
                    blk.F0(i, j) = blk.F0(j, i) = e.constant();
                    for (const auto &t : e.terms())
                    {
                        if (t.coef == 0.0)
                            continue;
                        auto [it, inserted] = local.emplace(t.var, static_cast<int>(blk.vars.size()));
                        if (inserted)
                        {
                            blk.vars.push_back(t.var);
                            blk.F.emplace_back();
                        }
                        blk.F[it->second].push_back({i, j, t.coef});
                    }
                }
            st.psd.push_back(std::move(blk));
            break;
        }
        }
    }

    st.A = RMatrix::Zero(static_cast<Eigen::Index>(eq.size()), st.n);
    st.b = RVector::Zero(static_cast<Eigen::Index>(eq.size()));
    for (std::size_t r = 0; r < eq.size(); ++r)
    {
        st.b(r) = -eq[r]->constant();
        for (const auto &t : eq[r]->terms())
            st.A(r, t.var) += t.coef;
    }
    st.Dl = RMatrix::Zero(static_cast<Eigen::Index>(lp.size()), st.n);
    st.dl = RVector::Zero(static_cast<Eigen::Index>(lp.size()));
    for (std::size_t r = 0; r < lp.size(); ++r)
    {
        st.dl(r) = lp[r]->constant();
        for (const auto &t : lp[r]->terms())
            st.Dl(r, t.var) += t.coef;
    }
    st.degree = static_cast<int>(lp.size()) + static_cast<int>(st.soc.size());
    for (const auto &b : st.psd)
        st.degree += b.n;
    for (auto &b : st.soc)
        b.DtD = b.D.transpose() * b.D;
    return st;
}

/// D x (without the constant d).
ConeVec apply_D(const Standard &st, const RVector &x)
{
    ConeVec v;
    v.lp = st.Dl * x;
    for (const auto &b : st.soc)
    {
        RVector xs(static_cast<Eigen::Index>(b.vars.size()));
        for (std::size_t k = 0; k < b.vars.size(); ++k)
            xs(k) = x(b.vars[k]);
        v.soc.push_back(b.D * xs);
    }
    for (const auto &b : st.psd)
    {
        RMatrix M = RMatrix::Zero(b.n, b.n);
        for (std::size_t k = 0; k < b.vars.size(); ++k)
        {
            const double xk = x(b.vars[k]);
            if (xk == 0.0)
                continue;
            for (const auto &e : b.F[k])
            {
                M(e.i, e.j) += xk * e.coef;
                if (e.i != e.j)
                    M(e.j, e.i) += xk * e.coef;
            }
        }
        v.psd.push_back(std::move(M));
    }
    return v;
}

ConeVec constant_d(const Standard &st)
{
    ConeVec v;
    v.lp = st.dl;
    for (const auto &b : st.soc)
        v.soc.push_back(b.d);
    for (const auto &b : st.psd)
        v.psd.push_back(b.F0);
    return v;
}

/// D' v
RVector apply_DT(const Standard &st, const ConeVec &v)
{
    RVector r = st.Dl.transpose() * v.lp;
    for (std::size_t k = 0; k < st.soc.size(); ++k)
    {
        const auto &b = st.soc[k];
        const RVector t = b.D.transpose() * v.soc[k];
        for (std::size_t j = 0; j < b.vars.size(); ++j)
            r(b.vars[j]) += t(j);
    }
    for (std::size_t k = 0; k < st.psd.size(); ++k)
    {
        const auto &b = st.psd[k];
        const RMatrix &V = v.psd[k];
        for (std::size_t j = 0; j < b.vars.size(); ++j)
        {
            double acc = 0.0;
            for (const auto &e : b.F[j])
                acc += e.i == e.j ? e.coef * V(e.i, e.i) : e.coef * (V(e.i, e.j) + V(e.j, e.i));
            r(b.vars[j]) += acc;
        }
    }
    return r;
}

// ------------------------------------------------------------------ scaling

struct SocScaling
{
    double beta = 1.0;
    RVector w; // hyperbolic unit vector, w0^2 - ||w1||^2 = 1
};

struct PsdScaling
{
    RMatrix R;
    RMatrix Rinv;
    RVector lambda;
};

struct Scaling
{
    RVector lp_w; // sqrt(s / z)
    std::vector<SocScaling> soc;
    std::vector<PsdScaling> psd;
    ConeVec lambda;
};

double soc_jnorm2(const RVector &v)
{
    const double t = v.tail(v.size() - 1).norm();
    return (v(0) - t) * (v(0) + t);
}

RVector soc_W(const SocScaling &sc, const RVector &v)
{
    const auto &w = sc.w;
    const Eigen::Index q = v.size();
    RVector r(q);
    if (q == 1)
    {
        r(0) = sc.beta * w(0) * v(0);
        return r;
    }
    const double w1v1 = w.tail(q - 1).dot(v.tail(q - 1));
    r(0) = sc.beta * (w(0) * v(0) + w1v1);
    r.tail(q - 1) = sc.beta * (v.tail(q - 1) + (v(0) + w1v1 / (1.0 + w(0))) * w.tail(q - 1));
    return r;
}

RVector soc_Winv(const SocScaling &sc, const RVector &v)
{
    const auto &w = sc.w;
    const Eigen::Index q = v.size();
    RVector r(q);
    if (q == 1)
    {
        r(0) = v(0) / (sc.beta * w(0));
        return r;
    }
    const double w1v1 = w.tail(q - 1).dot(v.tail(q - 1));
    r(0) = (w(0) * v(0) - w1v1) / sc.beta;
    r.tail(q - 1) = (v.tail(q - 1) + (-v(0) + w1v1 / (1.0 + w(0))) * w.tail(q - 1)) / sc.beta;
    return r;
}

bool compute_scaling(const Standard &st, const ConeVec &s, const ConeVec &z, Scaling &sc)
{
    sc.lambda = zeros_like(st);
    sc.lp_w.resize(s.lp.size());
    for (Eigen::Index i = 0; i < s.lp.size(); ++i)
    {
        if (!(s.lp(i) > 0.0) || !(z.lp(i) > 0.0))
            return false;
        sc.lp_w(i) = std::sqrt(s.lp(i) / z.lp(i));
        sc.lambda.lp(i) = std::sqrt(s.lp(i) * z.lp(i));
    }
    sc.soc.assign(st.soc.size(), {});
    for (std::size_t k = 0; k < st.soc.size(); ++k)
    {
        const RVector &sk = s.soc[k];
        const RVector &zk = z.soc[k];
        const double sn = soc_jnorm2(sk), zn = soc_jnorm2(zk);
        if (!(sn > 0.0) || !(zn > 0.0) || sk(0) <= 0.0 || zk(0) <= 0.0)
            return false;
        const RVector sb = sk / std::sqrt(sn);
        const RVector zb = zk / std::sqrt(zn);
        const double gamma = std::sqrt(0.5 * (1.0 + sb.dot(zb)));
        RVector w = sb;
        w(0) += zb(0);
        w.tail(w.size() - 1) -= zb.tail(zb.size() - 1);
        w /= 2.0 * gamma;
        sc.soc[k].w = w;
        sc.soc[k].beta = std::pow(sn / zn, 0.25);
        sc.lambda.soc[k] = soc_W(sc.soc[k], zk);
    }
    sc.psd.assign(st.psd.size(), {});
    for (std::size_t k = 0; k < st.psd.size(); ++k)
    {
        Eigen::LLT<RMatrix> ls(s.psd[k]), lz(z.psd[k]);
        if (ls.info() != Eigen::Success || lz.info() != Eigen::Success)
            return false;
        const RMatrix Ls = ls.matrixL();
        const RMatrix Lz = lz.matrixL();
        Eigen::JacobiSVD<RMatrix> svd(Lz.transpose() * Ls, Eigen::ComputeFullU | Eigen::ComputeFullV);
        const RVector lam = svd.singularValues();
        if (!(lam.minCoeff() > 0.0))
            return false;
        const RVector isq = lam.cwiseSqrt().cwiseInverse();
        auto &ps = sc.psd[k];
        ps.R = Ls * svd.matrixV() * isq.asDiagonal();
        ps.Rinv = isq.asDiagonal() * svd.matrixU().transpose() * Lz.transpose();
        ps.lambda = lam;
        sc.lambda.psd[k] = lam.asDiagonal();
    }
    return true;
}

ConeVec apply_W(const Scaling &sc, const ConeVec &v)
{
    ConeVec r = v;
    r.lp = sc.lp_w.cwiseProduct(v.lp).eval();
    for (std::size_t k = 0; k < v.soc.size(); ++k)
        r.soc[k] = soc_W(sc.soc[k], v.soc[k]);
    for (std::size_t k = 0; k < v.psd.size(); ++k)
        r.psd[k] = sc.psd[k].R.transpose() * v.psd[k] * sc.psd[k].R;
    return r;
}

ConeVec apply_Winv(const Scaling &sc, const ConeVec &v)
{
    ConeVec r = v;
    r.lp = v.lp.cwiseQuotient(sc.lp_w);
    for (std::size_t k = 0; k < v.soc.size(); ++k)
        r.soc[k] = soc_Winv(sc.soc[k], v.soc[k]);
    for (std::size_t k = 0; k < v.psd.size(); ++k)
        r.psd[k] = sc.psd[k].Rinv.transpose() * v.psd[k] * sc.psd[k].Rinv;
    return r;
}

ConeVec apply_WinvT(const Scaling &sc, const ConeVec &v)
{
    ConeVec r = v;
    r.lp = v.lp.cwiseQuotient(sc.lp_w);
    for (std::size_t k = 0; k < v.soc.size(); ++k)
        r.soc[k] = soc_Winv(sc.soc[k], v.soc[k]);
    for (std::size_t k = 0; k < v.psd.size(); ++k)
        r.psd[k] = sc.psd[k].Rinv * v.psd[k] * sc.psd[k].Rinv.transpose();
    return r;
}

ConeVec apply_WT(const Scaling &sc, const ConeVec &v)
{
    ConeVec r = v;
    r.lp = sc.lp_w.cwiseProduct(v.lp).eval();
    for (std::size_t k = 0; k < v.soc.size(); ++k)
        r.soc[k] = soc_W(sc.soc[k], v.soc[k]);
    for (std::size_t k = 0; k < v.psd.size(); ++k)
        r.psd[k] = sc.psd[k].R * v.psd[k] * sc.psd[k].R.transpose();
    return r;
}

// ---------------------------------------------------------- Jordan algebra

ConeVec jordan_product(const ConeVec &u, const ConeVec &v)
{
    ConeVec r = u;
    r.lp = u.lp.cwiseProduct(v.lp);
    for (std::size_t k = 0; k < u.soc.size(); ++k)
    {
        const RVector &a = u.soc[k];
        const RVector &b = v.soc[k];
        RVector c(a.size());
        c(0) = a.dot(b);
        const Eigen::Index q = a.size();
        if (q > 1)
            c.tail(q - 1) = a(0) * b.tail(q - 1) + b(0) * a.tail(q - 1);
        r.soc[k] = c;
    }
    for (std::size_t k = 0; k < u.psd.size(); ++k)
    {
        const RMatrix uv = u.psd[k] * v.psd[k];
        r.psd[k] = 0.5 * (uv + uv.transpose());
    }
    return r;
}

/// x with lambda o x = v (lambda from the scaling).
ConeVec jordan_solve(const Scaling &sc, const ConeVec &v)
{
    const ConeVec &lam = sc.lambda;
    ConeVec r = v;
    r.lp = v.lp.cwiseQuotient(lam.lp);
    for (std::size_t k = 0; k < v.soc.size(); ++k)
    {
        const RVector &l = lam.soc[k];
        const RVector &b = v.soc[k];
        const Eigen::Index q = l.size();
        RVector x(q);
        if (q == 1)
        {
            x(0) = b(0) / l(0);
        }
        else
        {
            x(0) = (l(0) * b(0) - l.tail(q - 1).dot(b.tail(q - 1))) / soc_jnorm2(l);
            x.tail(q - 1) = (b.tail(q - 1) - x(0) * l.tail(q - 1)) / l(0);
        }
        r.soc[k] = x;
    }
    for (std::size_t k = 0; k < v.psd.size(); ++k)
    {
        const RVector &l = sc.psd[k].lambda;
        RMatrix X = v.psd[k];
        for (Eigen::Index i = 0; i < X.rows(); ++i)
            for (Eigen::Index j = 0; j < X.cols(); ++j)
                X(i, j) *= 2.0 / (l(i) + l(j));
        r.psd[k] = X;
    }
    return r;
}

/// Largest alpha with lambda + alpha d in the cone (infinity when unbounded).
double max_step(const Scaling &sc, const ConeVec &d)
{
    constexpr double inf = std::numeric_limits<double>::infinity();
    double alpha = inf;
    const ConeVec &lam = sc.lambda;
    for (Eigen::Index i = 0; i < d.lp.size(); ++i)
        if (d.lp(i) < 0.0)
            alpha = std::min(alpha, -lam.lp(i) / d.lp(i));
    for (std::size_t k = 0; k < d.soc.size(); ++k)
    {
        const RVector &l = lam.soc[k];
        const RVector &v = d.soc[k];
        const Eigen::Index q = l.size();
        if (q == 1)
        {
            if (v(0) < 0.0)
                alpha = std::min(alpha, -l(0) / v(0));
            continue;
        }
        // (l0 + a v0)^2 - ||l1 + a v1||^2 = c + b a + a2 a^2
        const double c = soc_jnorm2(l);
        const double b = 2.0 * (l(0) * v(0) - l.tail(q - 1).dot(v.tail(q - 1)));
        const double a2 = v(0) * v(0) - v.tail(q - 1).squaredNorm();
        double root = inf;
        if (std::abs(a2) <= 1e-300 * std::max(1.0, std::abs(b)))
        {
            if (b < 0.0)
                root = -c / b;
        }
        else
        {
            const double disc = b * b - 4.0 * a2 * c;
            if (disc >= 0.0)
            {
                const double sq = std::sqrt(disc);
                const double qq = -0.5 * (b + (b >= 0.0 ? sq : -sq));
                const double r1 = qq / a2;
                const double r2 = qq != 0.0 ? c / qq : inf;
                for (double r : {r1, r2})
                    if (r > 0.0)
                        root = std::min(root, r);
            }
        }
        // the x0 >= 0 branch of the cone
        if (v(0) < 0.0)
            root = std::min(root, -l(0) / v(0));
        alpha = std::min(alpha, root);
    }
    for (std::size_t k = 0; k < d.psd.size(); ++k)
    {
        const RVector isq = sc.psd[k].lambda.cwiseSqrt().cwiseInverse();
        const RMatrix M = isq.asDiagonal() * d.psd[k] * isq.asDiagonal();
        Eigen::SelfAdjointEigenSolver<RMatrix> es(0.5 * (M + M.transpose()), Eigen::EigenvaluesOnly);
        const double emin = es.eigenvalues()(0);
        if (emin < 0.0)
            alpha = std::min(alpha, -1.0 / emin);
    }
    return alpha;
}

/// min{t : v + t e in cone}; negative when v is strictly inside.
double cone_deficiency(const ConeVec &v)
{
    double t = -std::numeric_limits<double>::infinity();
    if (v.lp.size() > 0)
        t = std::max(t, -v.lp.minCoeff());
    for (const auto &s : v.soc)
        t = std::max(t, s.tail(s.size() - 1).norm() - s(0));
    for (const auto &m : v.psd)
    {
        Eigen::SelfAdjointEigenSolver<RMatrix> es(0.5 * (m + m.transpose()), Eigen::EigenvaluesOnly);
        t = std::max(t, -es.eigenvalues()(0));
    }
    return t;
}

// -------------------------------------------------------------- normal matrix

/// H = D' Q D with Q = W^{-1} W^{-T}; identity scaling when sc == nullptr.
RMatrix normal_matrix(const Standard &st, const Scaling *sc)
{
    RMatrix H = RMatrix::Zero(st.n, st.n);
    if (st.Dl.rows() > 0)
    {
        RMatrix Dw = st.Dl;
        if (sc)
            Dw = sc->lp_w.cwiseInverse().asDiagonal() * st.Dl;
        H.selfadjointView<Eigen::Lower>().rankUpdate(Dw.transpose());
    }
    for (std::size_t k = 0; k < st.soc.size(); ++k)
    {
        const auto &b = st.soc[k];
        // W = beta (2 v v' - J) with v = (w + e0) / sqrt(2 (w0 + 1)), hence
        // W^{-1} = (2 a a' - J) / beta with a = J v and
        // W^{-2} = (I + 4|v|^2 a a' - 2 a v' - 2 v a') / beta^2
        RMatrix Hk = b.DtD;
        if (sc)
        {
            const auto &ws = sc->soc[k];
            const Eigen::Index q = b.D.rows();
            if (q == 1)
                Hk /= ws.beta * ws.beta * ws.w(0) * ws.w(0);
            else
            {
                RVector v = ws.w;
                v(0) += 1.0;
                v /= std::sqrt(2.0 * (ws.w(0) + 1.0));
                RVector a = -v;
                a(0) = v(0);
                const RVector pa = b.D.transpose() * a;
                const RVector rw = b.D.transpose() * v;
                Hk.noalias() += (4.0 * v.squaredNorm()) * pa * pa.transpose();
                Hk.noalias() -= 2.0 * (pa * rw.transpose());
                Hk.noalias() -= 2.0 * (rw * pa.transpose());
                Hk /= ws.beta * ws.beta;
            }
        }
        for (std::size_t i = 0; i < b.vars.size(); ++i)
            for (std::size_t j = 0; j <= i; ++j)
            {
                const int vi = b.vars[i], vj = b.vars[j];
                if (vi >= vj)
                    H(vi, vj) += Hk(i, j);
                else
                    H(vj, vi) += Hk(i, j);
            }
    }
    for (std::size_t k = 0; k < st.psd.size(); ++k)
    {
        const auto &b = st.psd[k];
        RMatrix P = RMatrix::Identity(b.n, b.n);
        if (sc)
            P = sc->psd[k].Rinv.transpose() * sc->psd[k].Rinv;
        // Tr(E_e P E_f P) for symmetric unit matrices E_e (e_i e_j' + e_j e_i', or
        // e_i e_i' on the diagonal) is 2 s_e s_f (P_jk P_il + P_jl P_ik), s = 1/2 on the diagonal
        const std::size_t nv = b.vars.size();
        for (std::size_t a = 0; a < nv; ++a)
            for (std::size_t c = 0; c <= a; ++c)
            {
                double acc = 0.0;
                for (const auto &e : b.F[a])
                {
                    const double se = e.i == e.j ? 0.5 : 1.0;
                    for (const auto &f : b.F[c])
                    {
                        const double sf = f.i == f.j ? 0.5 : 1.0;
                        acc += 2.0 * se * sf * e.coef * f.coef *
                               (P(e.j, f.i) * P(e.i, f.j) + P(e.j, f.j) * P(e.i, f.i));
                    }
                }
                const int va = b.vars[a], vc = b.vars[c];
                if (va >= vc)
                    H(va, vc) += acc;
                else
                    H(vc, va) += acc;
            }
    }
    H.triangularView<Eigen::StrictlyUpper>() = H.transpose();
    return H;
}

// --------------------------------------------------------------- KKT solver

class KktSolver
{
public:
    bool factor(const RMatrix &H, const RMatrix &A)
    {
        A_ = &A;
        RMatrix Hr = H;
        const double floor = 1e-300 + 1e-18 * H.diagonal().cwiseAbs().maxCoeff();
        Hr.diagonal().array() += 1e-12 * H.diagonal().array().abs() + floor;
        llt_.compute(Hr);
        use_llt_ = llt_.info() == Eigen::Success;
        if (!use_llt_)
        {
            ldlt_.compute(Hr);
            if (ldlt_.info() != Eigen::Success)
                return false;
        }
        if (A.rows() > 0)
        {
            HinvAt_ = hsolve(RMatrix(A.transpose()));
            RMatrix S = A * HinvAt_;
            S.diagonal().array() += 1e-14 * std::max(1.0, S.diagonal().cwiseAbs().maxCoeff());
            schur_.compute(S);
        }
        return true;
    }

    void solve(const RVector &r1, const RVector &r2, RVector &x, RVector &y) const
    {
        RVector hx = hsolve(r1);
        if (A_->rows() == 0)
        {
            x = hx;
            y = RVector::Zero(0);
            return;
        }
        y = schur_.solve((*A_) * hx - r2);
        x = hx - HinvAt_ * y;
    }

private:
    RMatrix hsolve(const RMatrix &r) const { return use_llt_ ? RMatrix(llt_.solve(r)) : RMatrix(ldlt_.solve(r)); }
    RVector hsolve(const RVector &r) const { return use_llt_ ? RVector(llt_.solve(r)) : RVector(ldlt_.solve(r)); }

    const RMatrix *A_ = nullptr;
    bool use_llt_ = false;
    Eigen::LLT<RMatrix> llt_;
    Eigen::LDLT<RMatrix> ldlt_;
    RMatrix HinvAt_;
    Eigen::PartialPivLU<RMatrix> schur_;
};

bool all_finite(const ConeVec &v)
{
    if (!v.lp.allFinite())
        return false;
    for (const auto &s : v.soc)
        if (!s.allFinite())
            return false;
    for (const auto &m : v.psd)
        if (!m.allFinite())
            return false;
    return true;
}

} // namespace

ConeSolution solve(const ConeProgram &p, const SolveOptions &opts)
{
    ConeSolution sol;
    const Standard st = to_standard(p);
    const double tol = opts.tol;

    if (st.n == 0)
    {
        sol.values = RVector::Zero(0);
        sol.objective_value = p.objective_value(sol.values);
        sol.status = p.max_violation(sol.values) <= tol ? SolveStatus::Optimal : SolveStatus::Infeasible;
        return sol;
    }

    const ConeVec dvec = constant_d(st);
    const double nrm_b = std::max(1.0, st.b.norm());
    const double nrm_d = std::max(1.0, norm(dvec));
    const double nrm_c = std::max(1.0, st.c.norm());
    const ConeVec e = identity_like(st);

    // Initial point: least-norm slacks and multipliers, shifted into the cone.
    RVector x, y;
    ConeVec s, z;
    {
        const RMatrix H0 = normal_matrix(st, nullptr);
        KktSolver kkt;
        if (!kkt.factor(H0, st.A))
            return sol;
        RVector u, v;
        kkt.solve(-apply_DT(st, dvec), st.b, x, v);
        s = apply_D(st, x);
        axpy(1.0, dvec, s);
        kkt.solve(st.c, RVector::Zero(st.A.rows()), u, v);
        y = -v;
        z = apply_D(st, u);

        const double ts = cone_deficiency(s);
        if (ts >= -1e-8 * std::max(1.0, norm(s)))
            axpy(1.0 + ts, e, s);
        const double tz = cone_deficiency(z);
        if (tz >= -1e-8 * std::max(1.0, norm(z)))
            axpy(1.0 + tz, e, z);
    }

    auto finish = [&](SolveStatus status, int iters) {
        sol.status = status;
        sol.values = x;
        sol.iterations = iters;
        sol.objective_value = p.objective_value(x);
        return sol;
    };

    Scaling sc;
    for (int iter = 0; iter <= opts.max_iterations; ++iter)
    {
        // residuals
        const RVector rx = st.c + st.A.transpose() * y - apply_DT(st, z);
        const RVector ry = st.A * x - st.b;
        ConeVec rs = apply_D(st, x);
        axpy(1.0, dvec, rs);
        axpy(-1.0, s, rs);

        const double pcost = st.c.dot(x);
        const double dcost = -dot(dvec, z) - st.b.dot(y);
        const double gap = dot(s, z);
        const double pres = std::max(ry.norm() / nrm_b, norm(rs) / nrm_d);
        const double dres = rx.norm() / nrm_c;
        const double denom = std::max(1.0, std::min(std::abs(pcost + st.c0), std::abs(dcost + st.c0)));
        const double relgap = std::max(gap, std::abs(pcost - dcost)) / denom;
        sol.primal_residual = pres;
        sol.dual_residual = dres;
        sol.relative_gap = relgap;

        if (!std::isfinite(pcost) || !std::isfinite(dcost) || !std::isfinite(gap))
            return finish(SolveStatus::NumericalFailure, iter);
        if (pres <= tol && dres <= tol && relgap <= tol)
            return finish(SolveStatus::Optimal, iter);

        // infeasibility certificates
        {
            const double hz = dot(dvec, z) + st.b.dot(y);
            if (hz < 0.0)
            {
                const RVector ray = apply_DT(st, z) - st.A.transpose() * y;
                if (ray.norm() <= tol * -hz && cone_deficiency(z) <= tol * -hz)
                    return finish(SolveStatus::Infeasible, iter);
            }
            if (pcost < 0.0)
            {
                const ConeVec Dx = apply_D(st, x);
                if ((st.A * x).norm() <= tol * -pcost && cone_deficiency(Dx) <= tol * -pcost)
                    return finish(SolveStatus::Unbounded, iter);
            }
        }
        if (iter == opts.max_iterations)
            break;

        if (!compute_scaling(st, s, z, sc))
            return finish(SolveStatus::NumericalFailure, iter);
        const RMatrix H = normal_matrix(st, &sc);
        KktSolver kkt;
        if (!kkt.factor(H, st.A))
            return finish(SolveStatus::NumericalFailure, iter);

        // Newton system in (dx, dy, dz):
        //   A'dy - D'dz = bx,  A dx = by,  D dx + W'W dz = bz
        // reduced to H dx + A'dy = bx + D'Q bz with Q = (W'W)^{-1}, then refined
        // against the unreduced equations.
        auto reduced_solve = [&](const RVector &bx, const RVector &by, const ConeVec &bz, RVector &dx, RVector &dy,
                                 ConeVec &dz) {
            const ConeVec Qbz = apply_Winv(sc, apply_WinvT(sc, bz));
            kkt.solve(bx + apply_DT(st, Qbz), by, dx, dy);
            dz = combine(1.0, Qbz, -1.0, apply_Winv(sc, apply_WinvT(sc, apply_D(st, dx))));
        };
        struct Direction
        {
            RVector dx, dy;
            ConeVec ds, dz, ds_s, dz_s;
        };
        auto direction = [&](const ConeVec &rc) {
            Direction d;
            const RVector bx = -rx;
            const RVector by = -ry;
            const ConeVec bz = combine(1.0, apply_WT(sc, jordan_solve(sc, rc)), -1.0, rs);
            reduced_solve(bx, by, bz, d.dx, d.dy, d.dz);
            for (int refine = 0; refine < 1; ++refine)
            {
                RVector ex = bx + apply_DT(st, d.dz);
                if (st.A.rows() > 0)
                    ex -= st.A.transpose() * d.dy;
                const RVector ey = by - st.A * d.dx;
                ConeVec ez = combine(1.0, bz, -1.0, apply_D(st, d.dx));
                axpy(-1.0, apply_WT(sc, apply_W(sc, d.dz)), ez);
                RVector cx, cy;
                ConeVec cz;
                reduced_solve(ex, ey, ez, cx, cy, cz);
                d.dx += cx;
                if (st.A.rows() > 0)
                    d.dy += cy;
                axpy(1.0, cz, d.dz);
            }
            d.ds = combine(1.0, apply_D(st, d.dx), 1.0, rs);
            d.ds_s = apply_WinvT(sc, d.ds);
            d.dz_s = apply_W(sc, d.dz);
            return d;
        };

        const double mu = gap / std::max(1, st.degree);
        const ConeVec lamsq = jordan_product(sc.lambda, sc.lambda);

        // predictor
        ConeVec rc = lamsq;
        rc = combine(-1.0, lamsq, 0.0, lamsq);
        const Direction aff = direction(rc);
        if (!aff.dx.allFinite() || !all_finite(aff.ds) || !all_finite(aff.dz))
            return finish(SolveStatus::NumericalFailure, iter);
        const double amax_aff = std::min(max_step(sc, aff.ds_s), max_step(sc, aff.dz_s));
        const double alpha_aff = std::min(1.0, amax_aff);
        const double dsdz = dot(aff.ds_s, aff.dz_s);
        const double ratio = gap > 0.0 ? 1.0 - alpha_aff + alpha_aff * alpha_aff * dsdz / gap : 0.0;
        const double sigma = std::pow(std::clamp(ratio, 0.0, 1.0), 3.0);

        // corrector
        rc = combine(-1.0, lamsq, -1.0, jordan_product(aff.ds_s, aff.dz_s));
        axpy(sigma * mu, e, rc);
        const Direction dir = direction(rc);
        if (!dir.dx.allFinite() || !all_finite(dir.ds) || !all_finite(dir.dz))
            return finish(SolveStatus::NumericalFailure, iter);
        const double amax = std::min(max_step(sc, dir.ds_s), max_step(sc, dir.dz_s));
        const double alpha = std::min(1.0, 0.99 * amax);

        x += alpha * dir.dx;
        if (st.A.rows() > 0)
            y += alpha * dir.dy;
        axpy(alpha, dir.ds, s);
        axpy(alpha, dir.dz, z);
        // keep PSD blocks exactly symmetric
        for (auto &m : s.psd)
            m = 0.5 * (m + m.transpose()).eval();
        for (auto &m : z.psd)
            m = 0.5 * (m + m.transpose()).eval();
    }
    return finish(SolveStatus::NumericalFailure, opts.max_iterations);
}

} // namespace risaoi::conic
