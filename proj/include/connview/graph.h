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

#ifndef CONNVIEW_GRAPH_H_
#define CONNVIEW_GRAPH_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "connview/attr.h"

namespace connview {

using NodeIndex = std::uint32_t;
using EdgeIndex = std::uint32_t;

struct Node {
  std::string id;
  AttrMap attrs;

  bool operator==(const Node&) const = default;
};

struct Edge {
  std::string id;
  std::string source;
  std::string target;
  AttrMap attrs;

  bool operator==(const Edge&) const = default;
};

/// Immutable multivariate directed graph.
///
/// Nodes and edges are stored sorted by id, so comparing two indices gives
/// the same answer as comparing the ids they stand for. Adjacency is kept in
/// CSR form for both directions; incident edge lists are sorted by edge id.
/// Parallel edges and self-loops are accepted.
class Graph {
 public:
  Graph() = default;

  /// Validates and indexes the input. Throws DataError on duplicate ids,
  /// empty ids, dangling endpoints, and attributes that are missing from the
  /// schema or conflict with its kind.
  static Graph build(std::vector<Node> nodes, std::vector<Edge> edges,
                     GraphSchema schema);

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const Node& node(NodeIndex n) const { return nodes_[n]; }
  const Edge& edge(EdgeIndex e) const { return edges_[e]; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const GraphSchema& schema() const { return schema_; }

  NodeIndex source(EdgeIndex e) const { return source_[e]; }
  NodeIndex target(EdgeIndex e) const { return target_[e]; }

  std::optional<NodeIndex> find_node(std::string_view id) const;
  std::optional<EdgeIndex> find_edge(std::string_view id) const;
  /// Throws NotFoundError for unknown ids.
  NodeIndex node_index(std::string_view id) const;

  std::span<const EdgeIndex> out_edges(NodeIndex n) const {
    return {out_list_.data() + out_offsets_[n],
            out_list_.data() + out_offsets_[n + 1]};
  }
  std::span<const EdgeIndex> in_edges(NodeIndex n) const {
    return {in_list_.data() + in_offsets_[n],
            in_list_.data() + in_offsets_[n + 1]};
  }
  /// Total degree, in + out. A self-loop counts twice.
  std::size_t degree(NodeIndex n) const {
    return out_edges(n).size() + in_edges(n).size();
  }

  // Id-based accessors; unknown ids raise NotFoundError.
  std::vector<std::string> out_edges_of(std::string_view node_id) const;
  std::vector<std::string> in_edges_of(std::string_view node_id) const;
  std::size_t degree_of(std::string_view node_id) const;

  /// Looks up an attribute; nullptr when the node lacks it.
  const AttrValue* node_attr(NodeIndex n, std::string_view name) const;
  const AttrValue* edge_attr(EdgeIndex e, std::string_view name) const;

  /// Recomputes the adjacency indexes from the edge list and compares them
  /// with the stored ones.
  bool indexes_consistent() const;

  /// Node-, edge- and attribute-wise equality plus schema equality.
  bool operator==(const Graph& other) const {
    return schema_ == other.schema_ && nodes_ == other.nodes_ &&
           edges_ == other.edges_;
  }

 private:
  struct Adjacency {
    std::vector<std::uint32_t> out_offsets, out_list, in_offsets, in_list;
  };
  static Adjacency index_edges(std::size_t node_count,
                               const std::vector<NodeIndex>& source,
                               const std::vector<NodeIndex>& target);

  GraphSchema schema_;
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<NodeIndex> source_;
  std::vector<NodeIndex> target_;
  std::vector<std::uint32_t> out_offsets_{0};
  std::vector<EdgeIndex> out_list_;
  std::vector<std::uint32_t> in_offsets_{0};
  std::vector<EdgeIndex> in_list_;
  std::unordered_map<std::string, NodeIndex> node_lookup_;
  std::unordered_map<std::string, EdgeIndex> edge_lookup_;
};

/// A chain of one or more edges. `nodes()` has length() + 1 entries.
///
/// Ordering is lexicographic by (start, end, length, edge sequence), which
/// matches ordering by ids because graph indices are id-sorted.
class Path {
 public:
  /// Unchecked; callers guarantee the chaining invariant.
  Path(std::vector<EdgeIndex> edges, std::vector<NodeIndex> nodes)
      : edges_(std::move(edges)), nodes_(std::move(nodes)) {}

  /// Builds a path from edges, deriving the node sequence. Throws DataError
  /// if the list is empty or consecutive edges do not chain.
  static Path from_edges(const Graph& graph, std::vector<EdgeIndex> edges);

  std::size_t length() const { return edges_.size(); }
  NodeIndex start() const { return nodes_.front(); }
  NodeIndex end() const { return nodes_.back(); }
  NodeIndex node_at(std::size_t position) const { return nodes_.at(position); }
  std::span<const EdgeIndex> edges() const { return edges_; }
  std::span<const NodeIndex> nodes() const { return nodes_; }

  bool operator==(const Path& other) const { return edges_ == other.edges_; }
  std::strong_ordering operator<=>(const Path& other) const;

 private:
  std::vector<EdgeIndex> edges_;
  std::vector<NodeIndex> nodes_;
};

/// Chaining and node-sequence consistency of `path` against `graph`.
bool is_chained(const Graph& graph, const Path& path);

/// "A>B>C" style rendering of the node ids, for diagnostics and listings.
std::string describe(const Graph& graph, const Path& path);

}  // namespace connview

#endif  // CONNVIEW_GRAPH_H_
