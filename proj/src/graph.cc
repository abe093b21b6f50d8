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

#include "connview/graph.h"

#include <algorithm>

#include "connview/error.h"

namespace connview {

namespace {

void check_attrs(const AttrMap& attrs, const AttrSchema& schema,
                 std::string_view owner_kind, const std::string& owner_id) {
  for (const auto& [name, value] : attrs) {
    auto it = schema.find(name);
    if (it == schema.end()) {
      throw DataError(std::string(owner_kind) + " '" + owner_id +
                      "' has attribute '" + name + "' missing from schema");
    }
    if (it->second != value.kind()) {
      throw DataError(std::string(owner_kind) + " '" + owner_id +
                      "' attribute '" + name + "' is " +
                      std::string(to_string(value.kind())) +
                      " but schema declares " +
                      std::string(to_string(it->second)));
    }
  }
}

template <typename T>
void check_ids(const std::vector<T>& items, std::string_view what) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].id.empty()) {
      throw DataError(std::string(what) + " with empty id");
    }
    if (i > 0 && items[i - 1].id == items[i].id) {
      throw DataError("duplicate " + std::string(what) + " id '" +
                      items[i].id + "'");
    }
  }
}

}  // namespace

Graph Graph::build(std::vector<Node> nodes, std::vector<Edge> edges,
                   GraphSchema schema) {
  auto by_id = [](const auto& a, const auto& b) { return a.id < b.id; };
  std::sort(nodes.begin(), nodes.end(), by_id);
  std::sort(edges.begin(), edges.end(), by_id);
  check_ids(nodes, "node");
  check_ids(edges, "edge");

  Graph g;
  g.node_lookup_.reserve(nodes.size());
  for (NodeIndex i = 0; i < nodes.size(); ++i) {
    check_attrs(nodes[i].attrs, schema.node_attrs, "node", nodes[i].id);
    g.node_lookup_.emplace(nodes[i].id, i);
  }
  g.edge_lookup_.reserve(edges.size());
  g.source_.reserve(edges.size());
  g.target_.reserve(edges.size());
  for (EdgeIndex i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    check_attrs(e.attrs, schema.edge_attrs, "edge", e.id);
    auto src = g.node_lookup_.find(e.source);
    auto dst = g.node_lookup_.find(e.target);
    if (src == g.node_lookup_.end() || dst == g.node_lookup_.end()) {
      const std::string& missing =
          src == g.node_lookup_.end() ? e.source : e.target;
      throw DataError("edge '" + e.id + "' references missing node '" +
                      missing + "'");
    }
    g.source_.push_back(src->second);
    g.target_.push_back(dst->second);
    g.edge_lookup_.emplace(e.id, i);
  }

  Adjacency adj = index_edges(nodes.size(), g.source_, g.target_);
  g.out_offsets_ = std::move(adj.out_offsets);
  g.out_list_ = std::move(adj.out_list);
  g.in_offsets_ = std::move(adj.in_offsets);
  g.in_list_ = std::move(adj.in_list);
  g.nodes_ = std::move(nodes);
  g.edges_ = std::move(edges);
  g.schema_ = std::move(schema);
  return g;
}

Graph::Adjacency Graph::index_edges(std::size_t node_count,
                                    const std::vector<NodeIndex>& source,
                                    const std::vector<NodeIndex>& target) {
  Adjacency adj;
  adj.out_offsets.assign(node_count + 1, 0);
  adj.in_offsets.assign(node_count + 1, 0);
  for (std::size_t e = 0; e < source.size(); ++e) {
    ++adj.out_offsets[source[e] + 1];
    ++adj.in_offsets[target[e] + 1];
  }
  for (std::size_t n = 0; n < node_count; ++n) {
    adj.out_offsets[n + 1] += adj.out_offsets[n];
    adj.in_offsets[n + 1] += adj.in_offsets[n];
  }
  adj.out_list.resize(source.size());
  adj.in_list.resize(source.size());
  std::vector<std::uint32_t> out_fill(adj.out_offsets.begin(),
                                      adj.out_offsets.end() - 1);
  std::vector<std::uint32_t> in_fill(adj.in_offsets.begin(),
                                     adj.in_offsets.end() - 1);
  // Edges are visited in id order, so each incident list comes out sorted.
  for (EdgeIndex e = 0; e < source.size(); ++e) {
    adj.out_list[out_fill[source[e]]++] = e;
    adj.in_list[in_fill[target[e]]++] = e;
  }
  return adj;
}

bool Graph::indexes_consistent() const {
  Adjacency adj = index_edges(nodes_.size(), source_, target_);
  return adj.out_offsets == out_offsets_ && adj.out_list == out_list_ &&
         adj.in_offsets == in_offsets_ && adj.in_list == in_list_;
}

std::optional<NodeIndex> Graph::find_node(std::string_view id) const {
  auto it = node_lookup_.find(std::string(id));
  if (it == node_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeIndex> Graph::find_edge(std::string_view id) const {
  auto it = edge_lookup_.find(std::string(id));
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

NodeIndex Graph::node_index(std::string_view id) const {
  auto n = find_node(id);
  if (!n) throw NotFoundError("unknown node '" + std::string(id) + "'");
  return *n;
}

std::vector<std::string> Graph::out_edges_of(std::string_view node_id) const {
  std::vector<std::string> ids;
  for (EdgeIndex e : out_edges(node_index(node_id))) ids.push_back(edges_[e].id);
  return ids;
}

std::vector<std::string> Graph::in_edges_of(std::string_view node_id) const {
  std::vector<std::string> ids;
  for (EdgeIndex e : in_edges(node_index(node_id))) ids.push_back(edges_[e].id);
  return ids;
}

std::size_t Graph::degree_of(std::string_view node_id) const {
  return degree(node_index(node_id));
}

const AttrValue* Graph::node_attr(NodeIndex n, std::string_view name) const {
  const AttrMap& attrs = nodes_[n].attrs;
  auto it = attrs.find(name);
  return it == attrs.end() ? nullptr : &it->second;
}

const AttrValue* Graph::edge_attr(EdgeIndex e, std::string_view name) const {
  const AttrMap& attrs = edges_[e].attrs;
  auto it = attrs.find(name);
  return it == attrs.end() ? nullptr : &it->second;
}

Path Path::from_edges(const Graph& graph, std::vector<EdgeIndex> edges) {
  if (edges.empty()) throw DataError("path needs at least one edge");
  std::vector<NodeIndex> nodes;
  nodes.reserve(edges.size() + 1);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (edges[k] >= graph.edge_count()) {
      throw DataError("path references unknown edge index");
    }
    if (k == 0) {
      nodes.push_back(graph.source(edges[k]));
    } else if (graph.source(edges[k]) != nodes.back()) {
      throw DataError("edges '" + graph.edge(edges[k - 1]).id + "' and '" +
                      graph.edge(edges[k]).id + "' do not chain");
    }
    nodes.push_back(graph.target(edges[k]));
  }
  return Path(std::move(edges), std::move(nodes));
}

std::strong_ordering Path::operator<=>(const Path& other) const {
  if (auto c = start() <=> other.start(); c != 0) return c;
  if (auto c = end() <=> other.end(); c != 0) return c;
  if (auto c = length() <=> other.length(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      edges_.begin(), edges_.end(), other.edges_.begin(), other.edges_.end());
}

bool is_chained(const Graph& graph, const Path& path) {
  auto edges = path.edges();
  auto nodes = path.nodes();
  if (edges.empty() || nodes.size() != edges.size() + 1) return false;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (edges[k] >= graph.edge_count()) return false;
    if (graph.source(edges[k]) != nodes[k]) return false;
    if (graph.target(edges[k]) != nodes[k + 1]) return false;
  }
  return true;
}

std::string describe(const Graph& graph, const Path& path) {
  std::string out;
  for (std::size_t j = 0; j < path.nodes().size(); ++j) {
    if (j > 0) out += '>';
    out += graph.node(path.nodes()[j]).id;
  }
  return out;
}

}  // namespace connview
