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

#ifndef PTQEC_PAULI_HPP
#define PTQEC_PAULI_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ptqec/linalg.hpp"

namespace ptqec {

/// n-qubit Pauli operator in symplectic form: phase * prod_j X^{x_j} Z^{z_j},
/// with phase an integer power of i. Y on a qubit is (x=1, z=1) with one
/// factor of i folded into the phase (Y = i X Z).
class PauliString {
 public:
  PauliString() = default;
  static PauliString identity(int n);
  /// Letter notation, e.g. "XZZXI". Qubit 1 is the first letter.
  static PauliString from_string(const std::string& letters);
  /// Single-qubit Pauli at `qubit` (0-based) on n qubits; letter in {X,Y,Z}.
  static PauliString single(int n, int qubit, char letter);

  int num_qubits() const { return static_cast<int>(x_.size()); }
  bool x_bit(int q) const { return x_[static_cast<size_t>(q)]; }
  bool z_bit(int q) const { return z_[static_cast<size_t>(q)]; }
  /// Phase exponent k in i^k, k in 0..3.
  int phase_power() const { return phase_; }
  cd phase() const;

  bool is_identity() const;        // up to phase
  bool is_identity_operator() const;  // including phase
  int weight() const;
  bool is_hermitian() const;

  bool commutes_with(const PauliString& other) const;
  PauliString times(const PauliString& other) const;
  PauliString adjoint() const;

  std::string to_string() const;  // letters only, phase dropped

  /// 2x2 factor for one qubit, without the global phase.
  Matrix site_matrix(int q) const;
  /// Full 2^n x 2^n matrix including phase. Intended for small n.
  Matrix matrix() const;

  bool operator==(const PauliString& o) const {
    return x_ == o.x_ && z_ == o.z_ && phase_ == o.phase_;
  }

 private:
  std::vector<uint8_t> x_, z_;
  int phase_ = 0;  // power of i
};

}  // namespace ptqec

#endif  // PTQEC_PAULI_HPP
