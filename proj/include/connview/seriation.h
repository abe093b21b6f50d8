/** Copyright 2026 The connview Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * 	http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef CONNVIEW_SERIATION_H_
#define CONNVIEW_SERIATION_H_

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "connview/metric.h"
#include "connview/overview.h"

namespace connview {

/// Symmetric matrix of pairwise distances with a zero diagonal.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(std::size_t n = 0) : n_(n), d_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double v) {
    d_[i * n_ + j] = v;
    d_[j * n_ + i] = v;
  }

 private:
  std::size_t n_;
  std::vector<double> d_;
};

DistanceMatrix euclidean_distances(const std::vector<std::vector<double>>& points);

/// Binary merge tree. Ids [0, leaf_count) are leaves; id leaf_count + k is
/// merges[k]. Children always precede their parent.
struct Dendrogram {
  struct Merge {
    std::size_t left;
    std::size_t right;
    double height;
  };

  std::size_t leaf_count = 0;
  std::vector<Merge> merges;

  std::size_t root() const {
    return merges.empty() ? 0 : leaf_count + merges.size() - 1;
  }
  bool is_leaf(std::size_t id) const { return id < leaf_count; }
  const Merge& merge(std::size_t id) const { return merges[id - leaf_count]; }
};

/// Agglomerative clustering with average linkage (UPGMA). Ties pick the
/// pair with the smallest indices, so the result is deterministic.
Dendrogram average_linkage(const DistanceMatrix& distances);

/// Leaves left to right, without flipping any merge.
std::vector<std::size_t> leaf_order(const Dendrogram& tree);

/// Leaf order minimizing the summed distance of adjacent leaves over all
/// orders obtainable by flipping merges of `tree` (Bar-Joseph et al.).
/// O(n^3) time, O(n^2) memory.
std::vector<std::size_t> optimal_leaf_order(const Dendrogram& tree,
                                            const DistanceMatrix& distances);

/// Sum of distances between adjacent entries of `order`.
double ordering_cost(std::span<const std::size_t> order,
                     const DistanceMatrix& distances);

struct AttributeSort {
  std::string attribute;
  bool descending = false;
};

/// Average-linkage clustering of the metric vectors of the keys (undefined
/// cells count as 0) followed by optimal leaf ordering.
struct OptimalLeafOrdering {
  Metric metric = Metric::count();
};

using ReorderStrategy = std::variant<AttributeSort, OptimalLeafOrdering>;

/// Permutation of the top-level keys of one matrix axis; pass it to
/// ConnectivityMatrix::permuted.
///
/// Attribute sorting is stable: ties and nodes lacking the attribute keep
/// their current relative order, with lacking nodes last. Groups sort by
/// their own value when grouped by that attribute, otherwise by the first
/// member value in sort order. Optimal leaf ordering breaks ties by key id
/// and does not depend on the current order.
std::vector<std::size_t> reorder(const ConnectivityMatrix& matrix,
                                 AxisSide side,
                                 const ReorderStrategy& strategy);

/// Same for the rows of the intermediate table.
std::vector<std::size_t> reorder(const IntermediateTable& table,
                                 const ReorderStrategy& strategy);

}  // namespace connview

#endif  // CONNVIEW_SERIATION_H_
