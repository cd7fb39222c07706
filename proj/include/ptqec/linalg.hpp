// Copyright 2026 The ptqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PTQEC_LINALG_HPP
#define PTQEC_LINALG_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace ptqec {

using cd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Result of a thin complex SVD, a = u * diag(s) * vh.
struct SvdResult {
  Matrix u;                 // m x r, orthonormal columns
  std::vector<double> s;    // r singular values, descending
  Matrix vh;                // r x n, orthonormal rows
};

/// Thin SVD via LAPACK (divide-and-conquer, gesvd fallback).
/// Throws std::runtime_error if both drivers fail to converge.
SvdResult svd(const Matrix& a);

/// Thin QR: a = q * r with q m x k orthonormal, r k x n upper triangular.
void thin_qr(const Matrix& a, Matrix& q, Matrix& r);

/// Thin LQ: a = l * q with l m x k lower triangular, q k x n orthonormal rows.
void thin_lq(const Matrix& a, Matrix& l, Matrix& q);

/// Hermitian eigenvalues, ascending.
std::vector<double> hermitian_eigenvalues(const Matrix& a);

/// exp(-i * theta * h) for Hermitian h, by eigendecomposition.
Matrix hermitian_phase_exp(const Matrix& h, double theta);

}  // namespace ptqec

#endif  // PTQEC_LINALG_HPP
