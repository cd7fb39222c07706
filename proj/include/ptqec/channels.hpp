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

#ifndef PTQEC_CHANNELS_HPP
#define PTQEC_CHANNELS_HPP

#include <array>
#include <string>
#include <vector>

#include "ptqec/tensor.hpp"

namespace ptqec {

// Vectorization is row-major: vec(|i><j|) = |i> (x) |j>, so vec(rho)[r*d+s] =
// rho(r,s) and <<A|B>> = tr(A^dag B). Choi states use the unnormalized
// maximally entangled state Sum_i |ii>, so the identity-channel Choi has
// trace d.

/// vec(m) as a tensor with a single composite index of dim d^2.
Tensor vectorize(const Matrix& m, const std::string& index_name = "v");

/// Inverse of vectorize; the length must be a perfect square.
Matrix devectorize(const Tensor& v);
Matrix devectorize(const Vector& v);

enum class ChoiKind { channel, cp_element, state, povm_effect };

/// Choi state of a CP map from a din-dim input to a dout-dim output.
///
/// The body is a rank-4 tensor over (out_ket, out_bra, in_ket, in_bra) with
/// body[ok, ob, ik, ib] = <ok| E(|ik><ib|) |ob>. States are stored with
/// din = 1.
struct ChoiTensor {
  Tensor body;
  int64_t dim_in = 1;
  int64_t dim_out = 1;
  ChoiKind kind = ChoiKind::cp_element;

  static ChoiTensor zero(int64_t dim_out, int64_t dim_in, ChoiKind kind);

  /// Choi matrix over (out (x) in): row (ok, ik), column (ob, ib). PSD for CP.
  Matrix choi_matrix() const;
  /// Superoperator: vec(E(rho)) = superop() * vec(rho).
  Matrix superop() const;
  static ChoiTensor from_superop(const Matrix& s, int64_t dim_out, int64_t dim_in, ChoiKind kind);

  double trace() const;
  ChoiTensor scaled(cd factor) const;
  ChoiTensor plus(const ChoiTensor& other) const;
};

/// Choi state from Kraus operators (all dout x din).
ChoiTensor choi_from_kraus(const std::vector<Matrix>& kraus, ChoiKind kind = ChoiKind::channel);

/// Choi of a unitary (or isometry) conjugation v . v^dag.
ChoiTensor choi_from_isometry(const Matrix& v, ChoiKind kind = ChoiKind::channel);

/// Choi of a state (no input legs): E() = rho.
ChoiTensor choi_from_state(const Matrix& rho);

/// Action tr_i[(1_o (x) rho^T) Choi] of a Choi state on a density matrix.
Matrix apply_choi(const ChoiTensor& c, const Matrix& rho);

/// Link product: Choi of the composition b after a.
ChoiTensor link_product(const ChoiTensor& b, const ChoiTensor& a);

/// Validation helpers. Tolerances are absolute.
bool is_positive_semidefinite(const ChoiTensor& c, double tol = 1e-10);
bool is_trace_preserving(const ChoiTensor& c, double tol = 1e-10);
bool is_cptp(const ChoiTensor& c, double tol = 1e-10);

/// A collection of CP maps summing to a CPTP map.
struct Instrument {
  struct Element {
    std::string outcome;
    ChoiTensor map;
  };
  std::vector<Element> elements;

  const Element& find(const std::string& outcome) const;
  ChoiTensor sum() const;
  bool is_complete(double tol = 1e-10) const;
};

/// (subnormalized post-measurement state, probability) for one outcome.
std::pair<Matrix, double> instrument_outcome(const Instrument& inst, const Matrix& rho,
                                             const std::string& outcome);

// Noise primitives.

enum class DepolarizingConvention {
  // (1-p) rho + (p/3) sum_{X,Y,Z} s rho s ; valid for p in [0, 1].
  total_over_three,
  // (1-3p) rho + p sum_{X,Y,Z} s rho s ; valid for p in [0, 1/3].
  per_pauli,
};

struct NoiseParams {
  double p_err = 0.0;
  double j_nm = 0.0;  // data-bath Heisenberg coupling, radians per step
  double j_ct = 0.0;  // neighbor ZZ coupling, radians per step
  DepolarizingConvention depolarizing_convention = DepolarizingConvention::total_over_three;

  void validate() const;
  bool is_noiseless() const { return p_err == 0.0 && j_nm == 0.0 && j_ct == 0.0; }
};

/// Single-qubit depolarizing channel under the given convention.
ChoiTensor depolarizing_channel(double p, DepolarizingConvention convention);

/// Two-qubit unitary channel exp(-i j (XX + YY + ZZ)).
ChoiTensor heisenberg_coupling(double j);

/// Two-qubit unitary channel exp(-i j Z (x) Z).
ChoiTensor zz_coupling(double j);

/// Kraus weights {w_I, w_X, w_Y, w_Z} of the depolarizing channel.
std::array<double, 4> depolarizing_weights(double p, DepolarizingConvention convention);

const char* to_string(DepolarizingConvention c);
DepolarizingConvention depolarizing_convention_from_string(const std::string& s);

}  // namespace ptqec

#endif  // PTQEC_CHANNELS_HPP
