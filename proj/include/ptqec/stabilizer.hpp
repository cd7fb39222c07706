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

#ifndef PTQEC_STABILIZER_HPP
#define PTQEC_STABILIZER_HPP

#include <map>
#include <string>
#include <vector>

#include "ptqec/channels.hpp"
#include "ptqec/pauli.hpp"

namespace ptqec {

/// Length-(n-k) syndrome bit vector; bits[j] pairs with generator j.
struct Syndrome {
  std::vector<uint8_t> bits;

  Syndrome() = default;
  explicit Syndrome(std::vector<uint8_t> b) : bits(std::move(b)) {}
  static Syndrome from_index(uint32_t index, int m);  // bits[0] is the top bit
  uint32_t index() const;
  int size() const { return static_cast<int>(bits.size()); }
  std::string to_string() const;
  bool operator==(const Syndrome& o) const { return bits == o.bits; }
  bool operator<(const Syndrome& o) const { return bits < o.bits; }
};

/// An [[n, k, d]] stabilizer code with its destabilizers and codewords.
/// Only k = 1 instances are supported.
class StabilizerCode {
 public:
  /// Validates every group-theoretic invariant; throws on violation. Pure
  /// errors may be left empty, in which case a commuting destabilizer set is
  /// completed greedily over minimum-weight Paulis.
  StabilizerCode(std::string name, int n, int k, int d, std::vector<PauliString> generators,
                 std::vector<PauliString> logical_x, std::vector<PauliString> logical_z,
                 std::vector<PauliString> pure_errors = {});

  const std::string& name() const { return name_; }
  int n() const { return n_; }
  int k() const { return k_; }
  int d() const { return d_; }
  int num_syndromes() const { return 1 << (n_ - k_); }
  const std::vector<PauliString>& generators() const { return generators_; }
  const std::vector<PauliString>& logical_x() const { return logical_x_; }
  const std::vector<PauliString>& logical_z() const { return logical_z_; }
  const std::vector<PauliString>& pure_errors() const { return pure_errors_; }
  /// 2^k codewords; codeword(0) is the +1 eigenvector of Z_L.
  const Vector& codeword(int i) const { return codewords_[static_cast<size_t>(i)]; }

  /// Commutation signature of an error against the generators.
  Syndrome syndrome_of(const PauliString& error) const;

  /// Isometry |psi_0><0| + |psi_1><1| from the logical qubit into the
  /// physical register, as a 2^n x 2 matrix.
  Matrix encoder_matrix() const;

 private:
  std::string name_;
  int n_, k_, d_;
  std::vector<PauliString> generators_, logical_x_, logical_z_, pure_errors_;
  std::vector<Vector> codewords_;
};

StabilizerCode five_qubit_code();
StabilizerCode steane_code();

/// Loads a code from the declarative text format (see docs/formats in the
/// README): `n`, `k`, `d` headers and sections of Pauli letter strings.
StabilizerCode load_code_file(const std::string& path);
StabilizerCode parse_code_text(const std::string& text, const std::string& name);

/// Commutation check through the symplectic form.
bool pauli_commutes(const PauliString& p, const PauliString& q);

/// Projective measurement instrument {(1 + (-1)^x g)/2}; g must be a
/// Hermitian involution.
Instrument syndrome_instrument(const PauliString& g);

/// Product of destabilizers selected by s; its syndrome equals s.
PauliString pure_error_for(const StabilizerCode& code, const Syndrome& s);

/// Choi state of the encoding isometry channel (logical -> physical).
ChoiTensor encoder_isometry(const StabilizerCode& code);

/// Minimum-weight correction per syndrome; ties broken by the canonical
/// enumeration order (weight, then X before Z before Y per qubit, then qubit
/// index).
struct LutDecoder {
  std::vector<PauliString> table;  // indexed by Syndrome::index()
  const PauliString& correction(const Syndrome& s) const {
    return table[s.index()];
  }
};
LutDecoder lut_decoder(const StabilizerCode& code);

/// {I, X_L, Z_L, X_L Z_L}: one representative per logical coset (k = 1).
std::vector<PauliString> logical_representatives(const StabilizerCode& code);

/// Index of the logical coset of a syndrome-0 Pauli in the order above.
int logical_coset_index(const StabilizerCode& code, const PauliString& p);

}  // namespace ptqec

#endif  // PTQEC_STABILIZER_HPP
