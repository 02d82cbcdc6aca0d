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

#ifndef RISAOI_NUMERICS_HPP
#define RISAOI_NUMERICS_HPP

#include <Eigen/Dense>

#include <complex>
#include <utility>

namespace risaoi
{

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Largest eigenvalue of a Hermitian matrix with a unit-norm eigenvector.
struct EigPair
{
    double value = 0.0;
    CVector vector;
};

namespace numerics
{

/// Hermitian symmetrization (H + H^H) / 2.
CMatrix hermitian_part(const CMatrix &H);

/// Throws NonHermitian when any |H_ij - conj(H_ji)| exceeds `tol * max(1, max|H|)`.
void require_hermitian(const CMatrix &H, double tol = 1e-10);

/// Principal eigenpair of a Hermitian matrix.
///
/// The input is symmetrized before the dense eigendecomposition so that
/// matrices returned by an interior-point solver (Hermitian only to solver
/// tolerance) are accepted. Throws NonHermitian or NoConvergence.
EigPair principal_eig(const CMatrix &H);

/// Eigenvalues of a Hermitian matrix in ascending order.
RVector hermitian_eigenvalues(const CMatrix &H);

/// (nuclear norm, spectral norm) of a Hermitian PSD matrix.
/// Throws NotPSD when the smallest eigenvalue is below -1e-6 (scaled by max(1, ||H||_2)).
std::pair<double, double> nuclear_and_spectral(const CMatrix &Psi);

/// Entrywise projection onto the unit circle. Entries with modulus <= 1e-12 map to 1.
CVector unit_modulus_project(const CVector &v);

/// Largest deviation | |v_i| - 1 | over all entries.
double unit_modulus_error(const CVector &v);

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

} // namespace numerics
} // namespace risaoi

#endif
