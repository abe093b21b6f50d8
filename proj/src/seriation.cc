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

#include "connview/seriation.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "connview/error.h"

namespace connview {

DistanceMatrix euclidean_distances(
    const std::vector<std::vector<double>>& points) {
  DistanceMatrix d(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      double sum = 0;
      for (std::size_t k = 0; k < points[i].size(); ++k) {
        double diff = points[i][k] - points[j][k];
        sum += diff * diff;
      }
      d.set(i, j, std::sqrt(sum));
    }
  }
  return d;
}

Dendrogram average_linkage(const DistanceMatrix& distances) {
  const std::size_t n = distances.size();
  Dendrogram tree;
  tree.leaf_count = n;
  if (n < 2) return tree;

  constexpr double kInf = std::numeric_limits<double>::infinity();
  DistanceMatrix d = distances;
  std::vector<char> active(n, 1);
  std::vector<std::size_t> cluster(n), size(n, 1);
  std::iota(cluster.begin(), cluster.end(), 0);

  // Cached nearest active neighbour per slot; ties take the lowest slot.
  std::vector<std::size_t> nn(n, 0);
  std::vector<double> nn_dist(n, kInf);
  auto refresh = [&](std::size_t i) {
    nn_dist[i] = kInf;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && active[j] && d(i, j) < nn_dist[i]) {
        nn_dist[i] = d(i, j);
        nn[i] = j;
      }
    }
  };
  for (std::size_t i = 0; i < n; ++i) refresh(i);

  for (std::size_t step = 0; step + 1 < n; ++step) {
    std::size_t a = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (active[i] && (a == n || nn_dist[i] < nn_dist[a])) a = i;
    }
    std::size_t b = nn[a];
    if (b < a) std::swap(a, b);
    double height = d(a, b);

    tree.merges.push_back({cluster[a], cluster[b], height});
    for (std::size_t k = 0; k < n; ++k) {
      if (!active[k] || k == a || k == b) continue;
      double merged = (size[a] * d(a, k) + size[b] * d(b, k)) /
                      static_cast<double>(size[a] + size[b]);
      d.set(a, k, merged);
    }
    active[b] = 0;
    size[a] += size[b];
    cluster[a] = n + step;

    for (std::size_t k = 0; k < n; ++k) {
      if (!active[k]) continue;
      if (k == a || nn[k] == a || nn[k] == b) {
        refresh(k);
      } else if (d(k, a) < nn_dist[k] ||
                 (d(k, a) == nn_dist[k] && a < nn[k])) {
        nn_dist[k] = d(k, a);
        nn[k] = a;
      }
    }
  }
  return tree;
}

std::vector<std::size_t> leaf_order(const Dendrogram& tree) {
  std::vector<std::size_t> order;
  if (tree.leaf_count == 0) return order;
  std::vector<std::size_t> stack{tree.root()};
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    if (tree.is_leaf(v)) {
      order.push_back(v);
    } else {
      stack.push_back(tree.merge(v).right);
      stack.push_back(tree.merge(v).left);
    }
  }
  return order;
}

double ordering_cost(std::span<const std::size_t> order,
                     const DistanceMatrix& distances) {
  double cost = 0;
  for (std::size_t i = 1; i < order.size(); ++i) {
    cost += distances(order[i - 1], order[i]);
  }
  return cost;
}

std::vector<std::size_t> optimal_leaf_order(const Dendrogram& tree,
                                            const DistanceMatrix& dist) {
  const std::size_t n = tree.leaf_count;
  if (n <= 2) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    return order;
  }
  const std::size_t node_count = n + tree.merges.size();

  // In the unflipped order every subtree is a contiguous interval.
  std::vector<std::size_t> plain = leaf_order(tree);
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[plain[i]] = i;
  std::vector<std::size_t> lo(node_count), hi(node_count);
  for (std::size_t v = 0; v < n; ++v) {
    lo[v] = pos[v];
    hi[v] = pos[v] + 1;
  }
  for (std::size_t k = 0; k < tree.merges.size(); ++k) {
    const auto& m = tree.merges[k];
    lo[n + k] = std::min(lo[m.left], lo[m.right]);
    hi[n + k] = std::max(hi[m.left], hi[m.right]);
  }
  auto contains = [&](std::size_t v, std::size_t leaf) {
    return pos[leaf] >= lo[v] && pos[leaf] < hi[v];
  };
  // Leaves of a subtree in ascending index order, for deterministic ties.
  auto leaves = [&](std::size_t v) {
    std::vector<std::size_t> out(plain.begin() + lo[v], plain.begin() + hi[v]);
    std::sort(out.begin(), out.end());
    return out;
  };
  // Leaves that can sit next to `end` on the inside of subtree v.
  auto inner = [&](std::size_t v, std::size_t end) {
    if (tree.is_leaf(v)) return std::vector<std::size_t>{end};
    const auto& m = tree.merge(v);
    return leaves(contains(m.left, end) ? m.right : m.left);
  };

  constexpr double kInf = std::numeric_limits<double>::infinity();
  // best[i*n+j]: cheapest order of lca(i,j)'s leaves from i to j.
  std::vector<double> best(n * n, kInf);
  std::vector<std::uint32_t> via_left(n * n), via_right(n * n);
  for (std::size_t i = 0; i < n; ++i) best[i * n + i] = 0;

  std::vector<double> partial(n);
  std::vector<std::size_t> partial_arg(n);
  for (std::size_t k = 0; k < tree.merges.size(); ++k) {
    const auto& m = tree.merges[k];
    std::vector<std::size_t> left = leaves(m.left);
    std::vector<std::size_t> right = leaves(m.right);
    for (std::size_t i : left) {
      // partial[mm] = min over k in inner(left, i) of best(i,k) + d(k,mm)
      std::vector<std::size_t> ks = inner(m.left, i);
      for (std::size_t mm : right) {
        double value = kInf;
        std::size_t arg = ks.front();
        for (std::size_t kk : ks) {
          double c = best[i * n + kk] + dist(kk, mm);
          if (c < value) {
            value = c;
            arg = kk;
          }
        }
        partial[mm] = value;
        partial_arg[mm] = arg;
      }
      for (std::size_t j : right) {
        double value = kInf;
        std::size_t arg_m = j;
        for (std::size_t mm : inner(m.right, j)) {
          double c = partial[mm] + best[mm * n + j];
          if (c < value) {
            value = c;
            arg_m = mm;
          }
        }
        std::size_t arg_k = partial_arg[arg_m];
        best[i * n + j] = value;
        best[j * n + i] = value;
        via_left[i * n + j] = static_cast<std::uint32_t>(arg_k);
        via_right[i * n + j] = static_cast<std::uint32_t>(arg_m);
        via_left[j * n + i] = static_cast<std::uint32_t>(arg_m);
        via_right[j * n + i] = static_cast<std::uint32_t>(arg_k);
      }
    }
  }

  // Pick the cheapest end pair; among equal costs the smallest first leaf.
  const std::size_t root = tree.root();
  const auto& rm = tree.merge(root);
  std::size_t first = n, last = n;
  double cost = kInf;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      bool spans = (contains(rm.left, i) && contains(rm.right, j)) ||
                   (contains(rm.right, i) && contains(rm.left, j));
      if (spans && best[i * n + j] < cost) {
        cost = best[i * n + j];
        first = i;
        last = j;
      }
    }
  }

  std::vector<std::size_t> order;
  order.reserve(n);
  // Iterative unfolding of (subtree, from, to) segments, left to right.
  struct Segment {
    std::size_t node, from, to;
  };
  std::vector<Segment> stack{{root, first, last}};
  while (!stack.empty()) {
    Segment s = stack.back();
    stack.pop_back();
    if (tree.is_leaf(s.node)) {
      order.push_back(s.from);
      continue;
    }
    const auto& m = tree.merge(s.node);
    std::size_t from_child = contains(m.left, s.from) ? m.left : m.right;
    std::size_t to_child = from_child == m.left ? m.right : m.left;
    std::size_t a = via_left[s.from * n + s.to];
    std::size_t b = via_right[s.from * n + s.to];
    stack.push_back({to_child, b, s.to});
    stack.push_back({from_child, s.from, a});
  }
  return order;
}

namespace {

struct SortValue {
  const AttrValue* value = nullptr;
  std::string group_text;  // grouped by the sort attribute
  bool from_group = false;
};

std::vector<std::size_t> attribute_sort(const Graph& graph, const Axis& axis,
                                        const AttributeSort& spec) {
  auto it = graph.schema().node_attrs.find(spec.attribute);
  if (it == graph.schema().node_attrs.end()) {
    throw SemanticError("unknown node attribute '" + spec.attribute + "'");
  }
  if (it->second == AttrKind::kGeo) {
    throw SemanticError("cannot sort by geo attribute '" + spec.attribute +
                        "'");
  }
  const bool numeric = it->second == AttrKind::kQuantitative;
  auto less = [&](const AttrValue& a, const AttrValue& b) {
    return numeric ? a.number() < b.number() : a.text() < b.text();
  };
  auto before = [&](const AttrValue& a, const AttrValue& b) {
    return spec.descending ? less(b, a) : less(a, b);
  };

  const auto& keys = axis.keys();
  std::vector<std::optional<AttrValue>> values(keys.size());
  for (std::size_t t = 0; t < keys.size(); ++t) {
    const AxisKey& k = keys[t];
    if (!k.is_group()) {
      if (const AttrValue* v = graph.node_attr(k.node, spec.attribute)) {
        values[t] = *v;
      }
    } else if (k.attribute == spec.attribute) {
      if (!k.unset) values[t] = AttrValue::categorical(k.value);
    } else {
      for (NodeIndex m : k.members) {
        const AttrValue* v = graph.node_attr(m, spec.attribute);
        if (v && (!values[t] || before(*v, *values[t]))) values[t] = *v;
      }
    }
  }
  std::vector<std::size_t> perm(keys.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (!values[a] || !values[b]) return values[a].has_value() && !values[b];
    return before(*values[a], *values[b]);
  });
  return perm;
}

// Slot shown for a top-level key: the group row for groups, else the leaf.
std::vector<std::size_t> top_slots(const Axis& axis) {
  std::vector<std::size_t> slots(axis.keys().size());
  const auto& shown = axis.displayed();
  for (std::size_t i = shown.size(); i-- > 0;) {
    if (!shown[i].parent) slots[shown[i].top] = i;
  }
  return slots;
}

std::vector<std::size_t> olo_permutation(
    const Axis& axis, const std::vector<std::vector<double>>& vectors) {
  const std::size_t count = vectors.size();
  // Canonical order by key id so the result ignores the current order.
  std::vector<std::size_t> canonical(count);
  std::iota(canonical.begin(), canonical.end(), 0);
  std::vector<std::size_t> slots = top_slots(axis);
  std::sort(canonical.begin(), canonical.end(),
            [&](std::size_t a, std::size_t b) {
              return axis.displayed()[slots[a]].id <
                     axis.displayed()[slots[b]].id;
            });
  std::vector<std::vector<double>> points;
  points.reserve(count);
  for (std::size_t t : canonical) points.push_back(vectors[t]);
  DistanceMatrix d = euclidean_distances(points);
  std::vector<std::size_t> order = optimal_leaf_order(average_linkage(d), d);
  std::vector<std::size_t> perm;
  perm.reserve(count);
  for (std::size_t i : order) perm.push_back(canonical[i]);
  return perm;
}

}  // namespace

std::vector<std::size_t> reorder(const ConnectivityMatrix& matrix,
                                 AxisSide side,
                                 const ReorderStrategy& strategy) {
  const Graph& graph = *matrix.source().graph;
  const Axis& axis = matrix.axis(side);
  if (const auto* sort = std::get_if<AttributeSort>(&strategy)) {
    return attribute_sort(graph, axis, *sort);
  }
  const Metric& metric = std::get<OptimalLeafOrdering>(strategy).metric;
  validate_metric(graph, metric);
  const Axis& other = matrix.axis(side == AxisSide::kRows ? AxisSide::kCols
                                                          : AxisSide::kRows);
  std::vector<std::size_t> mine = top_slots(axis);
  std::vector<std::size_t> theirs = top_slots(other);
  std::vector<std::vector<double>> vectors(mine.size());
  for (std::size_t t = 0; t < mine.size(); ++t) {
    vectors[t].reserve(theirs.size());
    for (std::size_t o : theirs) {
      auto ids = side == AxisSide::kRows ? matrix.cell(mine[t], o)
                                         : matrix.cell(o, mine[t]);
      vectors[t].push_back(
          evaluate_metric(metric, matrix.source(), ids).scalar_or(0.0));
    }
  }
  return olo_permutation(axis, vectors);
}

std::vector<std::size_t> reorder(const IntermediateTable& table,
                                 const ReorderStrategy& strategy) {
  const Graph& graph = *table.source().graph;
  const Axis& axis = table.rows();
  if (const auto* sort = std::get_if<AttributeSort>(&strategy)) {
    return attribute_sort(graph, axis, *sort);
  }
  const Metric& metric = std::get<OptimalLeafOrdering>(strategy).metric;
  validate_metric(graph, metric);
  std::vector<std::size_t> mine = top_slots(axis);
  std::vector<std::vector<double>> vectors(mine.size());
  for (std::size_t t = 0; t < mine.size(); ++t) {
    for (std::size_t c = 0; c < table.columns().size(); ++c) {
      vectors[t].push_back(
          evaluate_metric(metric, table.source(), table.cell(mine[t], c))
              .scalar_or(0.0));
    }
  }
  return olo_permutation(axis, vectors);
}

}  // namespace connview
