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

#include "risaoi/numerics.hpp"
#include "risaoi/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace risaoi::numerics
{

CMatrix hermitian_part(const CMatrix &H)
{
    if (H.rows() != H.cols())
        throw DimensionMismatch("hermitian_part: matrix is not square");
    return 0.5 * (H + H.adjoint());
}

void require_hermitian(const CMatrix &H, double tol)
{
    if (H.rows() != H.cols())
        throw DimensionMismatch("matrix is not square");
    if (!H.allFinite())
        throw NonHermitian("matrix has non-finite entries");
    const double scale = std::max(1.0, H.cwiseAbs().maxCoeff());
    const double asym = (H - H.adjoint()).cwiseAbs().maxCoeff();
    if (asym > tol * scale)
        throw NonHermitian("matrix is not Hermitian (asymmetry " + std::to_string(asym) + ")");
}

static Eigen::SelfAdjointEigenSolver<CMatrix> decompose(const CMatrix &H, bool vectors)
{
    require_hermitian(H);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(H),
                                              vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw NoConvergence("Hermitian eigendecomposition did not converge");
    return es;
}

EigPair principal_eig(const CMatrix &H)
{
    if (H.rows() == 0)
        throw DimensionMismatch("principal_eig: empty matrix");
    auto es = decompose(H, true);
    const Eigen::Index last = H.rows() - 1;
    EigPair out;
    out.value = es.eigenvalues()(last);
    out.vector = es.eigenvectors().col(last);
    out.vector /= out.vector.norm();
    return out;
}

RVector hermitian_eigenvalues(const CMatrix &H)
{
    return decompose(H, false).eigenvalues();
}

std::pair<double, double> nuclear_and_spectral(const CMatrix &Psi)
{
    const RVector ev = hermitian_eigenvalues(Psi);
    if (ev.size() == 0)
        return {0.0, 0.0};
    const double spectral = ev.cwiseAbs().maxCoeff();
    if (ev(0) < -1e-6 * std::max(1.0, spectral))
        throw NotPSD("matrix has eigenvalue " + std::to_string(ev(0)));
    return {ev.cwiseAbs().sum(), spectral};
}

CVector unit_modulus_project(const CVector &v)
{
    CVector out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i)
    {
        const double r = std::abs(v(i));
        if (r <= 1e-12)
            out(i) = cplx(1.0, 0.0);
        else if (std::abs(r - 1.0) <= 4.0 * std::numeric_limits<double>::epsilon())
            out(i) = v(i); // already on the circle; keeps the projection idempotent
        else
            out(i) = v(i) / r;
    }
    return out;
}

double unit_modulus_error(const CVector &v)
{
    double err = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        err = std::max(err, std::abs(std::abs(v(i)) - 1.0));
    return err;
}

} // namespace risaoi::numerics
