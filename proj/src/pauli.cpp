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

#include "ptqec/pauli.hpp"

#include <stdexcept>

namespace ptqec {

PauliString PauliString::identity(int n) {
  PauliString p;
  p.x_.assign(static_cast<size_t>(n), 0);
  p.z_.assign(static_cast<size_t>(n), 0);
  return p;
}

PauliString PauliString::from_string(const std::string& letters) {
  PauliString p = identity(static_cast<int>(letters.size()));
  for (size_t q = 0; q < letters.size(); ++q) {
    switch (letters[q]) {
      case 'I':
        break;
      case 'X':
        p.x_[q] = 1;
        break;
      case 'Z':
        p.z_[q] = 1;
        break;
      case 'Y':
        p.x_[q] = 1;
        p.z_[q] = 1;
        p.phase_ = (p.phase_ + 1) & 3;  // Y = i X Z
        break;
      default:
        throw std::invalid_argument("PauliString: bad letter '" + std::string(1, letters[q]) + "'");
    }
  }
  return p;
}

PauliString PauliString::single(int n, int qubit, char letter) {
  if (qubit < 0 || qubit >= n) throw std::invalid_argument("PauliString::single: qubit out of range");
  std::string s(static_cast<size_t>(n), 'I');
  s[static_cast<size_t>(qubit)] = letter;
  return from_string(s);
}

cd PauliString::phase() const {
  static const cd table[4] = {cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};
  return table[phase_ & 3];
}

bool PauliString::is_identity() const {
  for (size_t q = 0; q < x_.size(); ++q)
    if (x_[q] || z_[q]) return false;
  return true;
}

bool PauliString::is_identity_operator() const { return is_identity() && phase_ == 0; }

int PauliString::weight() const {
  int w = 0;
  for (size_t q = 0; q < x_.size(); ++q)
    if (x_[q] || z_[q]) ++w;
  return w;
}

bool PauliString::is_hermitian() const {
  // (i^k prod X^x Z^z)^dag = i^{-k} (-1)^{sum x z} prod X^x Z^z.
  int xz = 0;
  for (size_t q = 0; q < x_.size(); ++q) xz += x_[q] & z_[q];
  return ((-phase_ + 2 * xz) & 3) == (phase_ & 3);
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (num_qubits() != other.num_qubits())
    throw std::invalid_argument("PauliString: size mismatch");
  int acc = 0;
  for (size_t q = 0; q < x_.size(); ++q)
    acc += x_[q] * other.z_[q] + z_[q] * other.x_[q];
  return (acc & 1) == 0;
}

PauliString PauliString::times(const PauliString& other) const {
  if (num_qubits() != other.num_qubits())
    throw std::invalid_argument("PauliString: size mismatch");
  PauliString out = identity(num_qubits());
  int ph = phase_ + other.phase_;
  for (size_t q = 0; q < x_.size(); ++q) {
    // Z^z of the left factor moves past X^x of the right: (-1)^{z x'}.
    ph += 2 * (z_[q] & other.x_[q]);
    out.x_[q] = x_[q] ^ other.x_[q];
    out.z_[q] = z_[q] ^ other.z_[q];
  }
  out.phase_ = ph & 3;
  return out;
}

PauliString PauliString::adjoint() const {
  PauliString out = *this;
  int xz = 0;
  for (size_t q = 0; q < x_.size(); ++q) xz += x_[q] & z_[q];
  out.phase_ = (-phase_ + 2 * xz) & 3;
  return out;
}

std::string PauliString::to_string() const {
  std::string s;
  s.reserve(x_.size());
  for (size_t q = 0; q < x_.size(); ++q) {
    if (x_[q] && z_[q])
      s += 'Y';
    else if (x_[q])
      s += 'X';
    else if (z_[q])
      s += 'Z';
    else
      s += 'I';
  }
  return s;
}

Matrix PauliString::site_matrix(int q) const {
  Matrix m = Matrix::Identity(2, 2);
  if (x_bit(q)) {
    Matrix x(2, 2);
    x << 0, 1, 1, 0;
    m = x * m;
  }
  if (z_bit(q)) {
    Matrix z(2, 2);
    z << 1, 0, 0, -1;
    m = m * z;  // X^x Z^z order
  }
  return m;
}

Matrix PauliString::matrix() const {
  const int n = num_qubits();
  Matrix m = Matrix::Identity(1, 1) * phase();
  for (int q = 0; q < n; ++q) {
    const Matrix f = site_matrix(q);
    Matrix next(m.rows() * 2, m.cols() * 2);
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index c = 0; c < m.cols(); ++c) next.block(2 * r, 2 * c, 2, 2) = m(r, c) * f;
    m = std::move(next);
  }
  return m;
}

}  // namespace ptqec
