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

#include "ptqec/channels.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace ptqec {

Tensor vectorize(const Matrix& m, const std::string& index_name) {
  if (m.rows() != m.cols()) throw std::invalid_argument("vectorize: matrix not square");
  const int64_t d = m.rows();
  Tensor t = Tensor::zeros({{index_name, d * d, IndexTag::bond}});
  for (int64_t r = 0; r < d; ++r)
    for (int64_t s = 0; s < d; ++s) t.data[static_cast<size_t>(r * d + s)] = m(r, s);
  return t;
}

Matrix devectorize(const Tensor& v) {
  if (v.rank() != 1) throw std::invalid_argument("devectorize: expected a single index");
  Vector vec(v.size());
  for (int64_t i = 0; i < v.size(); ++i) vec(i) = v.data[static_cast<size_t>(i)];
  return devectorize(vec);
}

Matrix devectorize(const Vector& v) {
  const auto len = static_cast<int64_t>(v.size());
  const auto d = static_cast<int64_t>(std::llround(std::sqrt(static_cast<double>(len))));
  if (d * d != len) throw std::invalid_argument("devectorize: length is not a perfect square");
  Matrix m(d, d);
  for (int64_t r = 0; r < d; ++r)
    for (int64_t s = 0; s < d; ++s) m(r, s) = v(r * d + s);
  return m;
}

namespace {

std::vector<IndexLabel> choi_labels(int64_t dout, int64_t din) {
  return {{"o_ket", dout, IndexTag::data_out},
          {"o_bra", dout, IndexTag::data_out},
          {"i_ket", din, IndexTag::data_in},
          {"i_bra", din, IndexTag::data_in}};
}

}  // namespace

ChoiTensor ChoiTensor::zero(int64_t dim_out, int64_t dim_in, ChoiKind kind) {
  ChoiTensor c;
  c.dim_in = dim_in;
  c.dim_out = dim_out;
  c.kind = kind;
  c.body = Tensor::zeros(choi_labels(dim_out, dim_in));
  return c;
}

Matrix ChoiTensor::choi_matrix() const {
  const int64_t dout = dim_out, din = dim_in;
  Matrix m(dout * din, dout * din);
  for (int64_t ok = 0; ok < dout; ++ok)
    for (int64_t ob = 0; ob < dout; ++ob)
      for (int64_t ik = 0; ik < din; ++ik)
        for (int64_t ib = 0; ib < din; ++ib)
          m(ok * din + ik, ob * din + ib) =
              body.data[static_cast<size_t>(((ok * dout + ob) * din + ik) * din + ib)];
  return m;
}

Matrix ChoiTensor::superop() const {
  // The body axis order (o_ket, o_bra, i_ket, i_bra) is already the row-major
  // (out-vec, in-vec) layout; only the storage order flips for Eigen.
  Matrix s(dim_out * dim_out, dim_in * dim_in);
  for (int64_t r = 0; r < dim_out * dim_out; ++r)
    for (int64_t c = 0; c < dim_in * dim_in; ++c)
      s(r, c) = body.data[static_cast<size_t>(r * dim_in * dim_in + c)];
  return s;
}

ChoiTensor ChoiTensor::from_superop(const Matrix& s, int64_t dim_out, int64_t dim_in,
                                    ChoiKind kind) {
  if (s.rows() != dim_out * dim_out || s.cols() != dim_in * dim_in)
    throw std::invalid_argument("from_superop: shape mismatch");
  ChoiTensor c = zero(dim_out, dim_in, kind);
  for (int64_t r = 0; r < s.rows(); ++r)
    for (int64_t col = 0; col < s.cols(); ++col)
      c.body.data[static_cast<size_t>(r * s.cols() + col)] = s(r, col);
  return c;
}

double ChoiTensor::trace() const {
  cd acc(0, 0);
  for (int64_t o = 0; o < dim_out; ++o)
    for (int64_t i = 0; i < dim_in; ++i)
      acc += body.data[static_cast<size_t>(((o * dim_out + o) * dim_in + i) * dim_in + i)];
  return acc.real();
}

ChoiTensor ChoiTensor::scaled(cd factor) const {
  ChoiTensor out = *this;
  for (auto& v : out.body.data) v *= factor;
  return out;
}

ChoiTensor ChoiTensor::plus(const ChoiTensor& other) const {
  if (dim_in != other.dim_in || dim_out != other.dim_out)
    throw std::invalid_argument("ChoiTensor::plus: shape mismatch");
  ChoiTensor out = *this;
  for (size_t i = 0; i < out.body.data.size(); ++i) out.body.data[i] += other.body.data[i];
  return out;
}

ChoiTensor choi_from_kraus(const std::vector<Matrix>& kraus, ChoiKind kind) {
  if (kraus.empty()) throw std::invalid_argument("choi_from_kraus: no operators");
  const int64_t dout = kraus[0].rows();
  const int64_t din = kraus[0].cols();
  for (const auto& k : kraus)
    if (k.rows() != dout || k.cols() != din)
      throw std::invalid_argument("choi_from_kraus: incompatible shapes");
  ChoiTensor c = ChoiTensor::zero(dout, din, kind);
  for (const auto& k : kraus)
    for (int64_t ok = 0; ok < dout; ++ok)
      for (int64_t ob = 0; ob < dout; ++ob)
        for (int64_t ik = 0; ik < din; ++ik)
          for (int64_t ib = 0; ib < din; ++ib)
            c.body.data[static_cast<size_t>(((ok * dout + ob) * din + ik) * din + ib)] +=
                k(ok, ik) * std::conj(k(ob, ib));
  return c;
}

ChoiTensor choi_from_isometry(const Matrix& v, ChoiKind kind) {
  return choi_from_kraus({v}, kind);
}

ChoiTensor choi_from_state(const Matrix& rho) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("choi_from_state: not square");
  ChoiTensor c = ChoiTensor::zero(rho.rows(), 1, ChoiKind::state);
  for (int64_t ok = 0; ok < rho.rows(); ++ok)
    for (int64_t ob = 0; ob < rho.rows(); ++ob)
      c.body.data[static_cast<size_t>(ok * rho.rows() + ob)] = rho(ok, ob);
  return c;
}

Matrix apply_choi(const ChoiTensor& c, const Matrix& rho) {
  if (rho.rows() != c.dim_in || rho.cols() != c.dim_in)
    throw std::invalid_argument("apply_choi: dimension mismatch");
  Matrix out = Matrix::Zero(c.dim_out, c.dim_out);
  for (int64_t ok = 0; ok < c.dim_out; ++ok)
    for (int64_t ob = 0; ob < c.dim_out; ++ob) {
      cd acc(0, 0);
      for (int64_t ik = 0; ik < c.dim_in; ++ik)
        for (int64_t ib = 0; ib < c.dim_in; ++ib)
          acc += c.body.data[static_cast<size_t>(((ok * c.dim_out + ob) * c.dim_in + ik) * c.dim_in + ib)] *
                 rho(ik, ib);
      out(ok, ob) = acc;
    }
  return out;
}

ChoiTensor link_product(const ChoiTensor& b, const ChoiTensor& a) {
  if (a.dim_out != b.dim_in)
    throw std::invalid_argument("link_product: a's output dim does not match b's input dim");
  // Composition of maps is a product of superoperators.
  Matrix s = b.superop() * a.superop();
  ChoiKind kind = ChoiKind::cp_element;
  if (a.kind == ChoiKind::channel && b.kind == ChoiKind::channel) kind = ChoiKind::channel;
  if (a.kind == ChoiKind::state) kind = ChoiKind::state;
  return ChoiTensor::from_superop(s, b.dim_out, a.dim_in, kind);
}

bool is_positive_semidefinite(const ChoiTensor& c, double tol) {
  auto ev = hermitian_eigenvalues(c.choi_matrix());
  return ev.empty() || ev.front() > -tol;
}

bool is_trace_preserving(const ChoiTensor& c, double tol) {
  // Partial trace over the output must be the identity on the input.
  for (int64_t ik = 0; ik < c.dim_in; ++ik)
    for (int64_t ib = 0; ib < c.dim_in; ++ib) {
      cd acc(0, 0);
      for (int64_t o = 0; o < c.dim_out; ++o)
        acc += c.body.data[static_cast<size_t>(((o * c.dim_out + o) * c.dim_in + ik) * c.dim_in + ib)];
      const cd want = (ik == ib) ? cd(1, 0) : cd(0, 0);
      if (std::abs(acc - want) > tol) return false;
    }
  return true;
}

bool is_cptp(const ChoiTensor& c, double tol) {
  return is_positive_semidefinite(c, tol) && is_trace_preserving(c, tol);
}

const Instrument::Element& Instrument::find(const std::string& outcome) const {
  for (const auto& e : elements)
    if (e.outcome == outcome) return e;
  throw std::invalid_argument("Instrument: unknown outcome '" + outcome + "'");
}

ChoiTensor Instrument::sum() const {
  if (elements.empty()) throw std::invalid_argument("Instrument: empty");
  ChoiTensor acc = elements[0].map;
  for (size_t i = 1; i < elements.size(); ++i) acc = acc.plus(elements[i].map);
  acc.kind = ChoiKind::channel;
  return acc;
}

bool Instrument::is_complete(double tol) const { return is_cptp(sum(), tol); }

std::pair<Matrix, double> instrument_outcome(const Instrument& inst, const Matrix& rho,
                                             const std::string& outcome) {
  const auto& el = inst.find(outcome);
  Matrix post = apply_choi(el.map, rho);
  return {post, post.trace().real()};
}

void NoiseParams::validate() const {
  if (p_err < 0.0 || p_err > 1.0) throw std::invalid_argument("NoiseParams: p_err out of [0,1]");
  if (depolarizing_convention == DepolarizingConvention::per_pauli && p_err > 1.0 / 3.0)
    throw std::invalid_argument("NoiseParams: per_pauli convention requires p_err <= 1/3");
  if (!std::isfinite(j_nm) || !std::isfinite(j_ct))
    throw std::invalid_argument("NoiseParams: couplings must be finite");
}

std::array<double, 4> depolarizing_weights(double p, DepolarizingConvention convention) {
  switch (convention) {
    case DepolarizingConvention::total_over_three:
      if (p < 0.0 || p > 1.0) throw std::invalid_argument("depolarizing: p out of [0,1]");
      return {1.0 - p, p / 3.0, p / 3.0, p / 3.0};
    case DepolarizingConvention::per_pauli:
      if (p < 0.0 || p > 1.0 / 3.0) throw std::invalid_argument("depolarizing: p out of [0,1/3]");
      return {1.0 - 3.0 * p, p, p, p};
  }
  throw std::invalid_argument("depolarizing: bad convention");
}

namespace {

Matrix pauli2(int a) {
  Matrix m(2, 2);
  switch (a) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, cd(0, -1), cd(0, 1), 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
  return out;
}

}  // namespace

ChoiTensor depolarizing_channel(double p, DepolarizingConvention convention) {
  const auto w = depolarizing_weights(p, convention);
  std::vector<Matrix> kraus;
  for (int a = 0; a < 4; ++a)
    if (w[static_cast<size_t>(a)] > 0.0)
      kraus.push_back(std::sqrt(w[static_cast<size_t>(a)]) * pauli2(a));
  return choi_from_kraus(kraus, ChoiKind::channel);
}

ChoiTensor heisenberg_coupling(double j) {
  Matrix h = kron(pauli2(1), pauli2(1)) + kron(pauli2(2), pauli2(2)) + kron(pauli2(3), pauli2(3));
  return choi_from_isometry(hermitian_phase_exp(h, j), ChoiKind::channel);
}

ChoiTensor zz_coupling(double j) {
  Matrix u = Matrix::Zero(4, 4);
  for (int z1 = 0; z1 < 2; ++z1)
    for (int z2 = 0; z2 < 2; ++z2) {
      const double sign = ((z1 ^ z2) == 0) ? 1.0 : -1.0;
      u(2 * z1 + z2, 2 * z1 + z2) = std::exp(cd(0, -j * sign));
    }
  return choi_from_isometry(u, ChoiKind::channel);
}

const char* to_string(DepolarizingConvention c) {
  return c == DepolarizingConvention::total_over_three ? "total_over_three" : "per_pauli";
}

DepolarizingConvention depolarizing_convention_from_string(const std::string& s) {
  if (s == "total_over_three") return DepolarizingConvention::total_over_three;
  if (s == "per_pauli") return DepolarizingConvention::per_pauli;
  throw std::invalid_argument("unknown depolarizing convention '" + s + "'");
}

}  // namespace ptqec
