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

#ifndef PTQEC_TENSOR_HPP
#define PTQEC_TENSOR_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ptqec/linalg.hpp"

namespace ptqec {

/// Role of a tensor leg. Mirrors the input/output/bath/classical wires of the
/// process diagrams; `bond` is reserved for factorization-internal legs.
enum class IndexTag { data_in, data_out, bath, classical, bond, logical };

struct IndexLabel {
  std::string name;
  int64_t dim = 1;
  IndexTag tag = IndexTag::bond;

  bool operator==(const IndexLabel& o) const { return name == o.name && dim == o.dim; }
};

/// Dense complex tensor with named indices, stored row-major over the index
/// order. Values are immutable by convention: operations return new tensors.
struct Tensor {
  std::vector<IndexLabel> indices;
  std::vector<cd> data;

  Tensor() = default;
  Tensor(std::vector<IndexLabel> idx, std::vector<cd> values);
  static Tensor zeros(std::vector<IndexLabel> idx);
  static Tensor scalar(cd value);

  int64_t size() const;
  int rank() const { return static_cast<int>(indices.size()); }
  int axis_of(const std::string& name) const;  // -1 if absent
  bool all_finite() const;

  /// Reorder axes to the given index-name order (must be a permutation).
  Tensor permuted(const std::vector<std::string>& order) const;

  /// Rename one index in place (dims unchanged).
  void rename(const std::string& from, const std::string& to);

  cd& at(const std::vector<int64_t>& coords);
  cd at(const std::vector<int64_t>& coords) const;
};

/// A binary contraction tree over a network, as an ordered list of pair
/// merges. Entries refer to the current tensor list: after each step the two
/// operands are removed and the product appended.
struct ContractionPath {
  std::vector<std::pair<int, int>> steps;
  double cost_estimate = 0.0;  // total multiply count
};

/// Pairwise contraction of two tensors over all shared index names.
Tensor contract_pair(const Tensor& a, const Tensor& b);

/// Contract a network down to the tensor over `keep`.
///
/// Every non-kept index name must appear on exactly two tensors with equal
/// dims; kept names on exactly one. Deterministic for a fixed path; when no
/// path is given, optimize_path supplies one.
Tensor contract(const std::vector<Tensor>& network, const std::set<std::string>& keep,
                const std::optional<ContractionPath>& path = std::nullopt);

/// Exhaustive-optimal contraction order for networks of <= 8 tensors,
/// greedy (smallest resulting tensor, ties by lexicographic operand ids)
/// beyond that.
ContractionPath optimize_path(const std::vector<Tensor>& network);

/// SVD factorization t = U * diag(s) * V across the (left | rest) bipartition.
///
/// U carries the left indices plus a fresh bond index and has orthonormal
/// columns; V carries the bond plus the remaining indices. At most max_rank
/// values are kept, all retained values exceed threshold, and at least one
/// value is always kept.
struct SvdSplit {
  Tensor u;
  std::vector<double> singular_values;
  Tensor v;
  double discarded_weight = 0.0;  // sum of squared dropped singular values
};
SvdSplit svd_split(const Tensor& t, const std::set<std::string>& left, int64_t max_rank,
                   double threshold, const std::string& bond_name = "bond");

double frobenius_norm(const Tensor& t);
double frobenius_distance(const Tensor& a, const Tensor& b);

}  // namespace ptqec

#endif  // PTQEC_TENSOR_HPP
