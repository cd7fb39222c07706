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

#include "ptqec/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

namespace ptqec {

namespace {

std::vector<int64_t> strides_of(const std::vector<IndexLabel>& idx) {
  std::vector<int64_t> st(idx.size());
  int64_t acc = 1;
  for (int i = static_cast<int>(idx.size()) - 1; i >= 0; --i) {
    st[static_cast<size_t>(i)] = acc;
    acc *= idx[static_cast<size_t>(i)].dim;
  }
  return st;
}

int64_t product_dims(const std::vector<IndexLabel>& idx) {
  int64_t acc = 1;
  for (const auto& l : idx) acc *= l.dim;
  return acc;
}

void validate_labels(const std::vector<IndexLabel>& idx) {
  for (const auto& l : idx) {
    if (l.dim < 1) throw std::invalid_argument("tensor index '" + l.name + "' has dim < 1");
    if (l.tag == IndexTag::classical && l.dim != 2)
      throw std::invalid_argument("classical index '" + l.name + "' must have dim 2");
  }
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = i + 1; j < idx.size(); ++j)
      if (idx[i].name == idx[j].name)
        throw std::invalid_argument("duplicate index name '" + idx[i].name + "'");
}

/// Copy src into dst laid out along axis order `perm` (dst axis k = src axis perm[k]).
void permute_into(const Tensor& src, const std::vector<int>& perm, std::vector<cd>& dst) {
  const int r = src.rank();
  const auto src_strides = strides_of(src.indices);
  std::vector<int64_t> dims(static_cast<size_t>(r)), sstr(static_cast<size_t>(r));
  for (int k = 0; k < r; ++k) {
    dims[static_cast<size_t>(k)] = src.indices[static_cast<size_t>(perm[static_cast<size_t>(k)])].dim;
    sstr[static_cast<size_t>(k)] = src_strides[static_cast<size_t>(perm[static_cast<size_t>(k)])];
  }
  dst.resize(src.data.size());
  if (r == 0) {
    if (!src.data.empty()) dst[0] = src.data[0];
    return;
  }
  // Odometer walk over destination order; the innermost destination axis is
  // the hot loop, so keep its source stride in a register.
  std::vector<int64_t> counter(static_cast<size_t>(r), 0);
  const int64_t inner_dim = dims[static_cast<size_t>(r - 1)];
  const int64_t inner_stride = sstr[static_cast<size_t>(r - 1)];
  int64_t src_off = 0;
  int64_t dst_off = 0;
  const int64_t total = static_cast<int64_t>(src.data.size());
  while (dst_off < total) {
    const cd* sp = src.data.data() + src_off;
    cd* dp = dst.data() + dst_off;
    for (int64_t i = 0; i < inner_dim; ++i) dp[i] = sp[i * inner_stride];
    dst_off += inner_dim;
    for (int k = r - 2; k >= 0; --k) {
      auto ku = static_cast<size_t>(k);
      src_off += sstr[ku];
      if (++counter[ku] < dims[ku]) break;
      src_off -= sstr[ku] * dims[ku];
      counter[ku] = 0;
    }
    if (r == 1) break;
  }
}

double log_contract_cost(const Tensor& a, const Tensor& b);

}  // namespace

Tensor::Tensor(std::vector<IndexLabel> idx, std::vector<cd> values)
    : indices(std::move(idx)), data(std::move(values)) {
  validate_labels(indices);
  if (static_cast<int64_t>(data.size()) != product_dims(indices))
    throw std::invalid_argument("tensor data length does not match index dims");
}

Tensor Tensor::zeros(std::vector<IndexLabel> idx) {
  validate_labels(idx);
  const int64_t n = product_dims(idx);
  return Tensor(std::move(idx), std::vector<cd>(static_cast<size_t>(n), cd(0, 0)));
}

Tensor Tensor::scalar(cd value) { return Tensor({}, {value}); }

int64_t Tensor::size() const { return static_cast<int64_t>(data.size()); }

int Tensor::axis_of(const std::string& name) const {
  for (size_t i = 0; i < indices.size(); ++i)
    if (indices[i].name == name) return static_cast<int>(i);
  return -1;
}

bool Tensor::all_finite() const {
  for (const auto& v : data)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

Tensor Tensor::permuted(const std::vector<std::string>& order) const {
  if (order.size() != indices.size())
    throw std::invalid_argument("permuted: order size mismatch");
  std::vector<int> perm;
  perm.reserve(order.size());
  for (const auto& name : order) {
    int ax = axis_of(name);
    if (ax < 0) throw std::invalid_argument("permuted: unknown index '" + name + "'");
    perm.push_back(ax);
  }
  Tensor out;
  out.indices.reserve(indices.size());
  for (int ax : perm) out.indices.push_back(indices[static_cast<size_t>(ax)]);
  permute_into(*this, perm, out.data);
  return out;
}

void Tensor::rename(const std::string& from, const std::string& to) {
  int ax = axis_of(from);
  if (ax < 0) throw std::invalid_argument("rename: unknown index '" + from + "'");
  indices[static_cast<size_t>(ax)].name = to;
  validate_labels(indices);
}

cd& Tensor::at(const std::vector<int64_t>& coords) {
  const auto st = strides_of(indices);
  int64_t off = 0;
  for (size_t i = 0; i < coords.size(); ++i) off += coords[i] * st[i];
  return data[static_cast<size_t>(off)];
}

cd Tensor::at(const std::vector<int64_t>& coords) const {
  return const_cast<Tensor*>(this)->at(coords);
}

Tensor contract_pair(const Tensor& a, const Tensor& b) {
  // Shared names are summed; order: free-of-a, free-of-b.
  std::vector<std::string> shared, free_a, free_b;
  for (const auto& l : a.indices) {
    int bx = b.axis_of(l.name);
    if (bx >= 0) {
      if (b.indices[static_cast<size_t>(bx)].dim != l.dim)
        throw std::invalid_argument("contract: dimension mismatch on shared index '" + l.name + "'");
      shared.push_back(l.name);
    } else {
      free_a.push_back(l.name);
    }
  }
  for (const auto& l : b.indices)
    if (a.axis_of(l.name) < 0) free_b.push_back(l.name);

  std::vector<std::string> ord_a = free_a;
  ord_a.insert(ord_a.end(), shared.begin(), shared.end());
  std::vector<std::string> ord_b = shared;
  ord_b.insert(ord_b.end(), free_b.begin(), free_b.end());

  Tensor pa = a.permuted(ord_a);
  Tensor pb = b.permuted(ord_b);

  int64_t m = 1, k = 1, n = 1;
  for (const auto& name : free_a) m *= a.indices[static_cast<size_t>(a.axis_of(name))].dim;
  for (const auto& name : shared) k *= a.indices[static_cast<size_t>(a.axis_of(name))].dim;
  for (const auto& name : free_b) n *= b.indices[static_cast<size_t>(b.axis_of(name))].dim;

  Tensor out;
  for (const auto& name : free_a) out.indices.push_back(a.indices[static_cast<size_t>(a.axis_of(name))]);
  for (const auto& name : free_b) out.indices.push_back(b.indices[static_cast<size_t>(b.axis_of(name))]);
  out.data.resize(static_cast<size_t>(m * n));

  // Row-major data viewed as column-major transposes: C^T = B^T * A^T.
  Eigen::Map<const Matrix> ma(pa.data.data(), k, m);
  Eigen::Map<const Matrix> mb(pb.data.data(), n, k);
  Eigen::Map<Matrix> mc(out.data.data(), n, m);
  mc.noalias() = mb * ma;
  return out;
}

namespace {

double log_contract_cost(const Tensor& a, const Tensor& b) {
  // Multiply count m*k*n, in log to survive large networks.
  double lm = 0, lk = 0, ln = 0;
  for (const auto& l : a.indices) {
    if (b.axis_of(l.name) >= 0)
      lk += std::log2(static_cast<double>(l.dim));
    else
      lm += std::log2(static_cast<double>(l.dim));
  }
  for (const auto& l : b.indices)
    if (a.axis_of(l.name) < 0) ln += std::log2(static_cast<double>(l.dim));
  return lm + lk + ln;
}

struct NetView {
  // Index occupancy for validation.
  static void validate(const std::vector<Tensor>& network, const std::set<std::string>& keep) {
    std::map<std::string, std::pair<int, int64_t>> occ;  // name -> (count, dim)
    for (const auto& t : network) {
      for (const auto& l : t.indices) {
        auto it = occ.find(l.name);
        if (it == occ.end()) {
          occ[l.name] = {1, l.dim};
        } else {
          if (it->second.second != l.dim)
            throw std::invalid_argument("contract: dimension mismatch on index '" + l.name + "'");
          it->second.first++;
        }
      }
    }
    for (const auto& [name, cd_] : occ) {
      const int count = cd_.first;
      const bool kept = keep.count(name) > 0;
      if (kept && count != 1)
        throw std::invalid_argument("contract: kept index '" + name + "' appears " +
                                    std::to_string(count) + " times");
      if (!kept && count != 2)
        throw std::invalid_argument("contract: dangling index '" + name + "' appears " +
                                    std::to_string(count) + " times");
    }
    for (const auto& name : keep)
      if (occ.find(name) == occ.end())
        throw std::invalid_argument("contract: kept index '" + name + "' not present");
  }
};

struct GreedyState {
  std::vector<std::vector<IndexLabel>> labels;  // live tensors' indices
  std::vector<std::string> ids;                 // lexicographic tie-break ids
};

bool tensors_share(const std::vector<IndexLabel>& a, const std::vector<IndexLabel>& b) {
  for (const auto& x : a)
    for (const auto& y : b)
      if (x.name == y.name) return true;
  return false;
}

std::vector<IndexLabel> merge_labels(const std::vector<IndexLabel>& a,
                                     const std::vector<IndexLabel>& b) {
  std::vector<IndexLabel> out;
  for (const auto& x : a) {
    bool shared = false;
    for (const auto& y : b)
      if (x.name == y.name) shared = true;
    if (!shared) out.push_back(x);
  }
  for (const auto& y : b) {
    bool shared = false;
    for (const auto& x : a)
      if (x.name == y.name) shared = true;
    if (!shared) out.push_back(y);
  }
  return out;
}

double pair_cost(const std::vector<IndexLabel>& a, const std::vector<IndexLabel>& b) {
  double c = 1.0;
  std::set<std::string> seen;
  for (const auto& x : a) {
    c *= static_cast<double>(x.dim);
    seen.insert(x.name);
  }
  for (const auto& y : b)
    if (!seen.count(y.name)) c *= static_cast<double>(y.dim);
  return c;  // m*n*k = product of union dims
}

double result_size(const std::vector<IndexLabel>& merged) {
  double s = 1.0;
  for (const auto& l : merged) s *= static_cast<double>(l.dim);
  return s;
}

}  // namespace

ContractionPath optimize_path(const std::vector<Tensor>& network) {
  const int n = static_cast<int>(network.size());
  ContractionPath path;
  if (n <= 1) return path;

  if (n <= 8) {
    // Subset DP over connected merges: optimal binary contraction tree.
    const int full = (1 << n) - 1;
    std::vector<double> best(static_cast<size_t>(full) + 1, -1.0);
    std::vector<std::pair<int, int>> split(static_cast<size_t>(full) + 1, {-1, -1});
    std::vector<std::vector<IndexLabel>> subset_labels(static_cast<size_t>(full) + 1);
    for (int i = 0; i < n; ++i) {
      best[static_cast<size_t>(1 << i)] = 0.0;
      subset_labels[static_cast<size_t>(1 << i)] = network[static_cast<size_t>(i)].indices;
    }
    for (int s = 1; s <= full; ++s) {
      if (best[static_cast<size_t>(s)] >= 0) continue;
      // Iterate proper sub-masks.
      for (int a = (s - 1) & s; a > 0; a = (a - 1) & s) {
        const int b = s & ~a;
        if (a > b) continue;  // unordered pair
        if (best[static_cast<size_t>(a)] < 0 || best[static_cast<size_t>(b)] < 0) continue;
        const auto& la = subset_labels[static_cast<size_t>(a)];
        const auto& lb = subset_labels[static_cast<size_t>(b)];
        const double c = best[static_cast<size_t>(a)] + best[static_cast<size_t>(b)] + pair_cost(la, lb);
        if (best[static_cast<size_t>(s)] < 0 || c < best[static_cast<size_t>(s)]) {
          best[static_cast<size_t>(s)] = c;
          split[static_cast<size_t>(s)] = {a, b};
          subset_labels[static_cast<size_t>(s)] = merge_labels(la, lb);
        }
      }
    }
    if (best[static_cast<size_t>(full)] < 0)
      throw std::invalid_argument("optimize_path: network is not contractible");

    // Flatten the tree into list-order steps. Simulate the live list: each
    // subset becomes an entry; leaves start as 0..n-1.
    std::vector<int> live;  // live[i] = subset mask at list slot i
    for (int i = 0; i < n; ++i) live.push_back(1 << i);
    std::function<void(int)> emit = [&](int mask) {
      if (split[static_cast<size_t>(mask)].first < 0) return;  // leaf
      emit(split[static_cast<size_t>(mask)].first);
      emit(split[static_cast<size_t>(mask)].second);
      int ia = -1, ib = -1;
      for (size_t i = 0; i < live.size(); ++i) {
        if (live[i] == split[static_cast<size_t>(mask)].first) ia = static_cast<int>(i);
        if (live[i] == split[static_cast<size_t>(mask)].second) ib = static_cast<int>(i);
      }
      path.steps.push_back({std::min(ia, ib), std::max(ia, ib)});
      const int keep_mask = mask;
      live.erase(live.begin() + std::max(ia, ib));
      live.erase(live.begin() + std::min(ia, ib));
      live.push_back(keep_mask);
    };
    emit(full);
    path.cost_estimate = best[static_cast<size_t>(full)];
    return path;
  }

  // Greedy: contract the pair minimizing the resulting tensor size, ties
  // broken by lexicographic operand ids.
  GreedyState st;
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    st.labels.push_back(network[static_cast<size_t>(i)].indices);
    st.ids.push_back("t" + std::to_string(i));
  }
  std::vector<int> slots(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) slots[static_cast<size_t>(i)] = i;
  int next_id = n;
  while (st.labels.size() > 1) {
    int bi = -1, bj = -1;
    double bsize = 0.0;
    std::pair<std::string, std::string> bids;
    for (size_t i = 0; i < st.labels.size(); ++i) {
      for (size_t j = i + 1; j < st.labels.size(); ++j) {
        if (!tensors_share(st.labels[i], st.labels[j])) continue;
        const double sz = result_size(merge_labels(st.labels[i], st.labels[j]));
        std::pair<std::string, std::string> ids{std::min(st.ids[i], st.ids[j]),
                                                std::max(st.ids[i], st.ids[j])};
        if (bi < 0 || sz < bsize || (sz == bsize && ids < bids)) {
          bi = static_cast<int>(i);
          bj = static_cast<int>(j);
          bsize = sz;
          bids = ids;
        }
      }
    }
    if (bi < 0) {
      // No shared indices anywhere: fall back to outer products in id order.
      bi = 0;
      bj = 1;
    }
    total += pair_cost(st.labels[static_cast<size_t>(bi)], st.labels[static_cast<size_t>(bj)]);
    path.steps.push_back({bi, bj});
    auto merged = merge_labels(st.labels[static_cast<size_t>(bi)], st.labels[static_cast<size_t>(bj)]);
    st.labels.erase(st.labels.begin() + bj);
    st.labels.erase(st.labels.begin() + bi);
    st.labels.push_back(std::move(merged));
    st.ids.erase(st.ids.begin() + bj);
    st.ids.erase(st.ids.begin() + bi);
    st.ids.push_back("t" + std::to_string(next_id++));
  }
  path.cost_estimate = total;
  return path;
}

Tensor contract(const std::vector<Tensor>& network, const std::set<std::string>& keep,
                const std::optional<ContractionPath>& path_opt) {
  if (network.empty()) throw std::invalid_argument("contract: empty network");
  NetView::validate(network, keep);
  if (network.size() == 1) {
    std::vector<std::string> order(keep.begin(), keep.end());
    return network[0].permuted(order);
  }

  ContractionPath path = path_opt ? *path_opt : optimize_path(network);
  std::vector<Tensor> live = network;
  for (const auto& [i, j] : path.steps) {
    if (i < 0 || j < 0 || i >= static_cast<int>(live.size()) || j >= static_cast<int>(live.size()) || i == j)
      throw std::invalid_argument("contract: malformed path step");
    Tensor prod = contract_pair(live[static_cast<size_t>(i)], live[static_cast<size_t>(j)]);
    live.erase(live.begin() + std::max(i, j));
    live.erase(live.begin() + std::min(i, j));
    live.push_back(std::move(prod));
  }
  if (live.size() != 1) throw std::invalid_argument("contract: path does not consume all tensors");

  // Normalize axis order: sorted keep order for determinism.
  Tensor out = std::move(live[0]);
  std::vector<std::string> order(keep.begin(), keep.end());
  if (order.size() != out.indices.size())
    throw std::invalid_argument("contract: result indices disagree with keep set");
  return out.permuted(order);
}

SvdSplit svd_split(const Tensor& t, const std::set<std::string>& left, int64_t max_rank,
                   double threshold, const std::string& bond_name) {
  if (left.empty()) throw std::invalid_argument("svd_split: left set is empty");
  if (max_rank < 1) throw std::invalid_argument("svd_split: max_rank must be >= 1");
  if (threshold < 0) throw std::invalid_argument("svd_split: threshold must be >= 0");
  std::vector<std::string> lorder, rorder;
  for (const auto& l : t.indices) {
    if (left.count(l.name))
      lorder.push_back(l.name);
    else
      rorder.push_back(l.name);
  }
  if (lorder.size() != left.size())
    throw std::invalid_argument("svd_split: left set contains unknown indices");
  if (rorder.empty()) throw std::invalid_argument("svd_split: left must be a proper subset");

  std::vector<std::string> order = lorder;
  order.insert(order.end(), rorder.begin(), rorder.end());
  Tensor p = t.permuted(order);

  int64_t m = 1, n = 1;
  std::vector<IndexLabel> lidx, ridx;
  for (const auto& name : lorder) {
    const auto& lab = t.indices[static_cast<size_t>(t.axis_of(name))];
    m *= lab.dim;
    lidx.push_back(lab);
  }
  for (const auto& name : rorder) {
    const auto& lab = t.indices[static_cast<size_t>(t.axis_of(name))];
    n *= lab.dim;
    ridx.push_back(lab);
  }

  // Row-major (m x n) buffer equals column-major (n x m); feed the transpose
  // and swap the factors back.
  Eigen::Map<const Matrix> mt(p.data.data(), n, m);
  SvdResult r = svd(mt);  // mt = u_t s vh_t ; t = vh_t^T s u_t^T

  int64_t rank = 0;
  double discarded = 0.0;
  const int64_t rmax = std::min<int64_t>(static_cast<int64_t>(r.s.size()), max_rank);
  for (int64_t i = 0; i < static_cast<int64_t>(r.s.size()); ++i) {
    if (i < rmax && r.s[static_cast<size_t>(i)] > threshold)
      rank = i + 1;
    else
      discarded += r.s[static_cast<size_t>(i)] * r.s[static_cast<size_t>(i)];
  }
  if (rank == 0) rank = 1;  // never truncate to nothing

  SvdSplit out;
  out.singular_values.assign(r.s.begin(), r.s.begin() + rank);
  out.discarded_weight = discarded;

  // With B = vh_t and A = u_t: t = B^T * diag(s) * A^T, and plain transposes
  // of the thin factors keep columns/rows orthonormal.
  IndexLabel bond{bond_name, rank, IndexTag::bond};
  out.u.indices = lidx;
  out.u.indices.push_back(bond);
  out.u.data.resize(static_cast<size_t>(m * rank));
  Eigen::Map<Matrix> mu(out.u.data.data(), rank, m);  // col-major view = u^T
  mu = r.vh.topRows(rank);

  out.v.indices.clear();
  out.v.indices.push_back(bond);
  out.v.indices.insert(out.v.indices.end(), ridx.begin(), ridx.end());
  out.v.data.resize(static_cast<size_t>(rank * n));
  Eigen::Map<Matrix> mv(out.v.data.data(), n, rank);  // col-major view = v^T
  mv = r.u.leftCols(rank);
  return out;
}

double frobenius_norm(const Tensor& t) {
  double acc = 0.0;
  for (const auto& v : t.data) acc += std::norm(v);
  return std::sqrt(acc);
}

double frobenius_distance(const Tensor& a, const Tensor& b) {
  Tensor bb = b.permuted([&] {
    std::vector<std::string> order;
    for (const auto& l : a.indices) order.push_back(l.name);
    return order;
  }());
  if (a.data.size() != bb.data.size())
    throw std::invalid_argument("frobenius_distance: shape mismatch");
  double acc = 0.0;
  for (size_t i = 0; i < a.data.size(); ++i) acc += std::norm(a.data[i] - bb.data[i]);
  return std::sqrt(acc);
}

}  // namespace ptqec
