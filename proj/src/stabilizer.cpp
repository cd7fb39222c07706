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

#include "ptqec/stabilizer.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace ptqec {

Syndrome Syndrome::from_index(uint32_t index, int m) {
  Syndrome s;
  s.bits.resize(static_cast<size_t>(m));
  for (int j = 0; j < m; ++j) s.bits[static_cast<size_t>(j)] = (index >> (m - 1 - j)) & 1u;
  return s;
}

uint32_t Syndrome::index() const {
  uint32_t v = 0;
  for (uint8_t b : bits) v = (v << 1) | (b & 1u);
  return v;
}

std::string Syndrome::to_string() const {
  std::string s;
  for (uint8_t b : bits) s += b ? '1' : '0';
  return s;
}

namespace {

/// Enumerates Pauli strings in the canonical tie-break order: by weight, then
/// per-qubit letter X < Z < Y on lexicographically ordered supports. Calls
/// visit(p) until it returns true; returns the accepted Pauli.
PauliString enumerate_paulis(int n, const std::function<bool(const PauliString&)>& visit) {
  static const char kLetters[3] = {'X', 'Z', 'Y'};
  const PauliString id = PauliString::identity(n);
  if (visit(id)) return id;
  for (int w = 1; w <= n; ++w) {
    std::vector<int> support(static_cast<size_t>(w));
    for (int i = 0; i < w; ++i) support[static_cast<size_t>(i)] = i;
    while (true) {
      // All letter assignments on this support, odometer over X < Z < Y.
      std::vector<int> letter(static_cast<size_t>(w), 0);
      while (true) {
        std::string s(static_cast<size_t>(n), 'I');
        for (int i = 0; i < w; ++i)
          s[static_cast<size_t>(support[static_cast<size_t>(i)])] =
              kLetters[letter[static_cast<size_t>(i)]];
        PauliString p = PauliString::from_string(s);
        if (visit(p)) return p;
        int pos = w - 1;
        while (pos >= 0 && letter[static_cast<size_t>(pos)] == 2) {
          letter[static_cast<size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
        ++letter[static_cast<size_t>(pos)];
      }
      // Next support combination.
      int pos = w - 1;
      while (pos >= 0 && support[static_cast<size_t>(pos)] == n - w + pos) --pos;
      if (pos < 0) break;
      ++support[static_cast<size_t>(pos)];
      for (int i = pos + 1; i < w; ++i)
        support[static_cast<size_t>(i)] = support[static_cast<size_t>(i - 1)] + 1;
    }
  }
  throw std::runtime_error("enumerate_paulis: exhausted without a match");
}

Vector apply_pauli(const PauliString& p, const Vector& v) {
  const int n = p.num_qubits();
  Vector out = v;
  for (int q = 0; q < n; ++q) {
    const Matrix f = p.site_matrix(q);
    if (f.isIdentity(0.0)) continue;
    const int64_t stride = int64_t{1} << (n - 1 - q);
    Vector next = Vector::Zero(out.size());
    for (int64_t base = 0; base < out.size(); ++base) {
      const int64_t bit = (base / stride) % 2;
      const int64_t other = bit ? base - stride : base + stride;
      next(base) = f(bit, bit) * out(base) + f(bit, 1 - bit) * out(other);
    }
    out = next;
  }
  return out * p.phase();
}

}  // namespace

StabilizerCode::StabilizerCode(std::string name, int n, int k, int d,
                               std::vector<PauliString> generators,
                               std::vector<PauliString> logical_x,
                               std::vector<PauliString> logical_z,
                               std::vector<PauliString> pure_errors)
    : name_(std::move(name)),
      n_(n),
      k_(k),
      d_(d),
      generators_(std::move(generators)),
      logical_x_(std::move(logical_x)),
      logical_z_(std::move(logical_z)),
      pure_errors_(std::move(pure_errors)) {
  if (k_ != 1) throw std::invalid_argument("StabilizerCode: only k = 1 codes are supported");
  const int m = n_ - k_;
  if (static_cast<int>(generators_.size()) != m)
    throw std::invalid_argument("StabilizerCode: expected n-k generators");
  if (static_cast<int>(logical_x_.size()) != k_ || static_cast<int>(logical_z_.size()) != k_)
    throw std::invalid_argument("StabilizerCode: expected k logical pairs");

  for (const auto& g : generators_) {
    if (g.num_qubits() != n_) throw std::invalid_argument("StabilizerCode: generator size mismatch");
    if (!g.is_hermitian()) throw std::invalid_argument("StabilizerCode: generator not Hermitian");
  }
  for (size_t i = 0; i < generators_.size(); ++i)
    for (size_t j = i + 1; j < generators_.size(); ++j)
      if (!generators_[i].commutes_with(generators_[j]))
        throw std::invalid_argument("StabilizerCode: generators do not commute");
  for (int a = 0; a < k_; ++a) {
    for (const auto& g : generators_) {
      if (!logical_x_[static_cast<size_t>(a)].commutes_with(g) ||
          !logical_z_[static_cast<size_t>(a)].commutes_with(g))
        throw std::invalid_argument("StabilizerCode: logicals must commute with generators");
    }
    for (int b = 0; b < k_; ++b) {
      const bool anti = !logical_x_[static_cast<size_t>(a)].commutes_with(logical_z_[static_cast<size_t>(b)]);
      if (anti != (a == b))
        throw std::invalid_argument("StabilizerCode: logical commutation pattern violated");
    }
  }

  if (pure_errors_.empty()) {
    // Greedy completion: for each generator pick the first Pauli in canonical
    // order anticommuting with it alone, commuting with earlier picks.
    for (int i = 0; i < m; ++i) {
      PauliString found = enumerate_paulis(n_, [&](const PauliString& p) {
        if (p.is_identity()) return false;
        for (int j = 0; j < m; ++j) {
          const bool anti = !p.commutes_with(generators_[static_cast<size_t>(j)]);
          if (anti != (i == j)) return false;
        }
        for (const auto& prev : pure_errors_)
          if (!p.commutes_with(prev)) return false;
        return true;
      });
      pure_errors_.push_back(found);
    }
  }
  if (static_cast<int>(pure_errors_.size()) != m)
    throw std::invalid_argument("StabilizerCode: expected n-k pure errors");
  for (int i = 0; i < m; ++i) {
    const auto& p = pure_errors_[static_cast<size_t>(i)];
    if (p.num_qubits() != n_) throw std::invalid_argument("StabilizerCode: pure error size mismatch");
    if (!p.is_hermitian()) throw std::invalid_argument("StabilizerCode: pure error not Hermitian");
    for (int j = 0; j < m; ++j) {
      const bool anti = !p.commutes_with(generators_[static_cast<size_t>(j)]);
      if (anti != (i == j))
        throw std::invalid_argument("StabilizerCode: pure error " + std::to_string(i) +
                                    " has the wrong commutation pattern");
    }
    for (int j = 0; j < i; ++j)
      if (!p.commutes_with(pure_errors_[static_cast<size_t>(j)]))
        throw std::invalid_argument("StabilizerCode: pure errors must commute pairwise");
  }

  // Codewords: project |0...0> onto the codespace and the Z_L = +1 sector.
  const int64_t dim = int64_t{1} << n_;
  Vector seed = Vector::Zero(dim);
  seed(0) = 1.0;
  Vector psi = seed;
  for (const auto& g : generators_) psi = 0.5 * (psi + apply_pauli(g, psi));
  psi = 0.5 * (psi + apply_pauli(logical_z_[0], psi));
  double norm = psi.norm();
  if (norm < 1e-12) {
    // |0...0> has no weight in the Z_L = +1 sector; seed from X_L |0...0>.
    psi = apply_pauli(logical_x_[0], seed);
    for (const auto& g : generators_) psi = 0.5 * (psi + apply_pauli(g, psi));
    psi = 0.5 * (psi + apply_pauli(logical_z_[0], psi));
    norm = psi.norm();
    if (norm < 1e-12) throw std::runtime_error("StabilizerCode: failed to construct codewords");
  }
  psi /= norm;
  codewords_.push_back(psi);
  codewords_.push_back(apply_pauli(logical_x_[0], psi));
}

Syndrome StabilizerCode::syndrome_of(const PauliString& error) const {
  Syndrome s;
  s.bits.reserve(generators_.size());
  for (const auto& g : generators_) s.bits.push_back(error.commutes_with(g) ? 0 : 1);
  return s;
}

Matrix StabilizerCode::encoder_matrix() const {
  Matrix enc(int64_t{1} << n_, 2);
  enc.col(0) = codewords_[0];
  enc.col(1) = codewords_[1];
  return enc;
}

StabilizerCode five_qubit_code() {
  return StabilizerCode(
      "five_qubit", 5, 1, 3,
      {PauliString::from_string("XZZXI"), PauliString::from_string("IXZZX"),
       PauliString::from_string("XIXZZ"), PauliString::from_string("ZXIXZ")},
      {PauliString::from_string("XXXXX")}, {PauliString::from_string("ZZZZZ")},
      {PauliString::from_string("IXIII"), PauliString::from_string("IIIIZ"),
       PauliString::from_string("IIZII"), PauliString::from_string("XIIII")});
}

StabilizerCode steane_code() {
  // CSS generators on the [7,4,3] Hamming parity checks; destabilizers are
  // completed greedily.
  return StabilizerCode(
      "steane", 7, 1, 3,
      {PauliString::from_string("IIIXXXX"), PauliString::from_string("IXXIIXX"),
       PauliString::from_string("XIXIXIX"), PauliString::from_string("IIIZZZZ"),
       PauliString::from_string("IZZIIZZ"), PauliString::from_string("ZIZIZIZ")},
      {PauliString::from_string("XXXXXXX")}, {PauliString::from_string("ZZZZZZZ")});
}

StabilizerCode parse_code_text(const std::string& text, const std::string& name) {
  std::istringstream in(text);
  std::string line;
  int n = -1, k = -1, d = -1;
  std::vector<PauliString> gens, lx, lz, pures;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    auto parse_pauli = [&](std::vector<PauliString>& dst, const std::string& letters) {
      if (n < 0) throw std::invalid_argument("code file: Pauli line before n (line " + std::to_string(lineno) + ")");
      PauliString p = PauliString::from_string(letters);
      if (p.num_qubits() != n)
        throw std::invalid_argument("code file: Pauli length mismatch (line " + std::to_string(lineno) + ")");
      dst.push_back(p);
    };
    if (tok == "n" || tok == "k" || tok == "d") {
      int v;
      if (!(ls >> v)) throw std::invalid_argument("code file: missing value for " + tok);
      (tok == "n" ? n : tok == "k" ? k : d) = v;
    } else if (tok == "generators" || tok == "logical_x" || tok == "logical_z" ||
               tok == "pure_errors") {
      section = tok;
      std::string rest;
      while (ls >> rest) {
        if (section == "generators") parse_pauli(gens, rest);
        else if (section == "logical_x") parse_pauli(lx, rest);
        else if (section == "logical_z") parse_pauli(lz, rest);
        else parse_pauli(pures, rest);
      }
    } else if (!section.empty()) {
      if (section == "generators") parse_pauli(gens, tok);
      else if (section == "logical_x") parse_pauli(lx, tok);
      else if (section == "logical_z") parse_pauli(lz, tok);
      else parse_pauli(pures, tok);
    } else {
      throw std::invalid_argument("code file: unexpected token '" + tok + "' (line " +
                                  std::to_string(lineno) + ")");
    }
  }
  if (n < 0 || k < 0) throw std::invalid_argument("code file: n and k are required");
  if (d < 0) d = 0;
  return StabilizerCode(name, n, k, d, gens, lx, lz, pures);
}

StabilizerCode load_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open code file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string name = path;
  const auto slash = name.find_last_of('/');
  if (slash != std::string::npos) name = name.substr(slash + 1);
  return parse_code_text(buf.str(), name);
}

bool pauli_commutes(const PauliString& p, const PauliString& q) { return p.commutes_with(q); }

Instrument syndrome_instrument(const PauliString& g) {
  if (!g.is_hermitian()) throw std::invalid_argument("syndrome_instrument: g must be Hermitian");
  const Matrix gm = g.matrix();
  const int64_t dim = gm.rows();
  if (!(gm * gm).isIdentity(1e-12))
    throw std::invalid_argument("syndrome_instrument: g must square to the identity");
  Instrument inst;
  for (int x = 0; x < 2; ++x) {
    const double sign = x == 0 ? 1.0 : -1.0;
    Matrix proj = 0.5 * (Matrix::Identity(dim, dim) + sign * gm);
    inst.elements.push_back({std::to_string(x), choi_from_kraus({proj}, ChoiKind::cp_element)});
  }
  return inst;
}

PauliString pure_error_for(const StabilizerCode& code, const Syndrome& s) {
  if (s.size() != code.n() - code.k())
    throw std::invalid_argument("pure_error_for: syndrome length mismatch");
  PauliString p = PauliString::identity(code.n());
  for (int i = 0; i < s.size(); ++i)
    if (s.bits[static_cast<size_t>(i)]) p = p.times(code.pure_errors()[static_cast<size_t>(i)]);
  return p;
}

ChoiTensor encoder_isometry(const StabilizerCode& code) {
  if (code.k() != 1) throw std::invalid_argument("encoder_isometry: k = 1 only");
  return choi_from_isometry(code.encoder_matrix(), ChoiKind::channel);
}

LutDecoder lut_decoder(const StabilizerCode& code) {
  const int m = code.n() - code.k();
  const int total = 1 << m;
  LutDecoder lut;
  lut.table.assign(static_cast<size_t>(total), PauliString::identity(code.n()));
  std::vector<bool> covered(static_cast<size_t>(total), false);
  int remaining = total;
  enumerate_paulis(code.n(), [&](const PauliString& p) {
    const uint32_t idx = code.syndrome_of(p).index();
    if (!covered[idx]) {
      covered[idx] = true;
      lut.table[idx] = p;
      --remaining;
    }
    return remaining == 0;
  });
  return lut;
}

std::vector<PauliString> logical_representatives(const StabilizerCode& code) {
  const auto& x = code.logical_x()[0];
  const auto& z = code.logical_z()[0];
  return {PauliString::identity(code.n()), x, z, x.times(z)};
}

int logical_coset_index(const StabilizerCode& code, const PauliString& p) {
  if (!code.syndrome_of(p).bits.empty()) {
    for (uint8_t b : code.syndrome_of(p).bits)
      if (b) throw std::invalid_argument("logical_coset_index: operator has nonzero syndrome");
  }
  const bool has_x = !p.commutes_with(code.logical_z()[0]);
  const bool has_z = !p.commutes_with(code.logical_x()[0]);
  if (has_x && has_z) return 3;  // Y_L coset
  if (has_z) return 2;           // Z_L coset
  if (has_x) return 1;           // X_L coset
  return 0;
}

}  // namespace ptqec
