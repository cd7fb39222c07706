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

#include "ptqec/linalg.hpp"

#include <lapacke.h>

#include <algorithm>
#include <stdexcept>

namespace ptqec {

namespace {

lapack_complex_double* lp(Matrix& m) {
  return reinterpret_cast<lapack_complex_double*>(m.data());
}

}  // namespace

SvdResult svd(const Matrix& a) {
  const lapack_int m = static_cast<lapack_int>(a.rows());
  const lapack_int n = static_cast<lapack_int>(a.cols());
  const lapack_int r = std::min(m, n);
  SvdResult out;
  out.s.resize(static_cast<size_t>(r));
  out.u.resize(m, r);
  out.vh.resize(r, n);

  // gesdd needs ~5*r*r of real workspace internally; acceptable for the
  // bond sizes in scope, and gesvd is the low-memory fallback.
  Matrix work = a;  // column-major copy, destroyed by LAPACK
  lapack_int info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'S', m, n, lp(work), m,
                                   out.s.data(), lp(out.u), m, lp(out.vh), r);
  if (info != 0) {
    work = a;
    std::vector<double> superb(static_cast<size_t>(std::max<lapack_int>(1, r - 1)));
    info = LAPACKE_zgesvd(LAPACK_COL_MAJOR, 'S', 'S', m, n, lp(work), m,
                          out.s.data(), lp(out.u), m, lp(out.vh), r,
                          superb.data());
    if (info != 0) {
      throw std::runtime_error("svd: LAPACK zgesdd/zgesvd failed to converge (info=" +
                               std::to_string(info) + ")");
    }
  }
  return out;
}

void thin_qr(const Matrix& a, Matrix& q, Matrix& r) {
  const lapack_int m = static_cast<lapack_int>(a.rows());
  const lapack_int n = static_cast<lapack_int>(a.cols());
  const lapack_int k = std::min(m, n);
  Matrix work = a;
  std::vector<cd> tau(static_cast<size_t>(k));
  lapack_int info = LAPACKE_zgeqrf(LAPACK_COL_MAJOR, m, n, lp(work), m,
                                   reinterpret_cast<lapack_complex_double*>(tau.data()));
  if (info != 0) throw std::runtime_error("thin_qr: zgeqrf failed");
  r = Matrix::Zero(k, n);
  for (lapack_int j = 0; j < n; ++j)
    for (lapack_int i = 0; i <= std::min<lapack_int>(j, k - 1); ++i) r(i, j) = work(i, j);
  info = LAPACKE_zungqr(LAPACK_COL_MAJOR, m, k, k, lp(work), m,
                        reinterpret_cast<lapack_complex_double*>(tau.data()));
  if (info != 0) throw std::runtime_error("thin_qr: zungqr failed");
  q = work.leftCols(k);
}

void thin_lq(const Matrix& a, Matrix& l, Matrix& q) {
  const lapack_int m = static_cast<lapack_int>(a.rows());
  const lapack_int n = static_cast<lapack_int>(a.cols());
  const lapack_int k = std::min(m, n);
  Matrix work = a;
  std::vector<cd> tau(static_cast<size_t>(k));
  lapack_int info = LAPACKE_zgelqf(LAPACK_COL_MAJOR, m, n, lp(work), m,
                                   reinterpret_cast<lapack_complex_double*>(tau.data()));
  if (info != 0) throw std::runtime_error("thin_lq: zgelqf failed");
  l = Matrix::Zero(m, k);
  for (lapack_int j = 0; j < k; ++j)
    for (lapack_int i = j; i < m; ++i) l(i, j) = work(i, j);
  // zunglq wants the reflectors in the first k rows.
  Matrix refl = work.topRows(k);
  info = LAPACKE_zunglq(LAPACK_COL_MAJOR, k, n, k, lp(refl), k,
                        reinterpret_cast<lapack_complex_double*>(tau.data()));
  if (info != 0) throw std::runtime_error("thin_lq: zunglq failed");
  q = refl;
}

std::vector<double> hermitian_eigenvalues(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigenvalues: eigensolver failed");
  std::vector<double> ev(static_cast<size_t>(a.rows()));
  for (Eigen::Index i = 0; i < a.rows(); ++i) ev[static_cast<size_t>(i)] = es.eigenvalues()(i);
  return ev;
}

Matrix hermitian_phase_exp(const Matrix& h, double theta) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("hermitian_phase_exp: eigensolver failed");
  const auto& v = es.eigenvectors();
  Vector phases(h.rows());
  for (Eigen::Index i = 0; i < h.rows(); ++i)
    phases(i) = std::exp(cd(0.0, -theta * es.eigenvalues()(i)));
  return v * phases.asDiagonal() * v.adjoint();
}

}  // namespace ptqec
