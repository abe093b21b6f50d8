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

#include "connview/details.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "connview/error.h"

namespace connview {

PathIds resolve_selection(const ConnectivityMatrix& matrix,
                          const IntermediateTable& table,
                          const Selection& selection) {
  PathIds ids;
  for (const SelectedCell& s : selection) {
    auto cell = s.view == SelectedCell::View::kMatrix
                    ? matrix.cell(s.cell.row, s.cell.col)
                    : table.cell(s.cell.row, s.cell.col);
    PathIds merged;
    merged.reserve(ids.size() + cell.size());
    std::set_union(ids.begin(), ids.end(), cell.begin(), cell.end(),
                   std::back_inserter(merged));
    ids = std::move(merged);
  }
  return ids;
}

std::vector<Motif> group_by_motif(const QueryResult& result,
                                  std::span<const std::uint32_t> path_ids,
                                  std::string_view display_attr) {
  const Graph& g = *result.graph;
  const bool by_id = display_attr == "id";
  if (!by_id) {
    auto it = g.schema().node_attrs.find(display_attr);
    if (it == g.schema().node_attrs.end() ||
        it->second != AttrKind::kCategorical) {
      throw SemanticError("motif display attribute '" +
                          std::string(display_attr) +
                          "' is not a categorical node attribute");
    }
  }
  auto label = [&](NodeIndex n) -> const std::string& {
    if (!by_id) {
      if (const AttrValue* v = g.node_attr(n, display_attr)) return v->text();
    }
    return g.node(n).id;
  };

  std::map<std::vector<std::string>, PathIds> groups;
  for (std::uint32_t id : path_ids) {
    std::vector<std::string> key;
    for (NodeIndex n : result.paths[id].nodes()) key.push_back(label(n));
    groups[std::move(key)].push_back(id);
  }
  std::vector<Motif> motifs;
  motifs.reserve(groups.size());
  for (auto& [key, members] : groups) {
    std::sort(members.begin(), members.end());
    motifs.push_back({key, std::move(members)});
  }
  std::stable_sort(motifs.begin(), motifs.end(),
                   [](const Motif& a, const Motif& b) {
                     return a.members.size() > b.members.size();
                   });
  return motifs;
}

namespace {

void force_layout(const Graph& g, SubgraphView& view,
                  const ForceLayoutOptions& options) {
  const std::size_t n = view.nodes.size();
  std::mt19937 rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (PlacedNode& p : view.nodes) {
    p.x = unit(rng);
    p.y = unit(rng);
  }
  if (n < 2) return;

  std::map<NodeIndex, std::size_t> slot;
  for (std::size_t i = 0; i < n; ++i) slot[view.nodes[i].node] = i;
  std::vector<std::pair<std::size_t, std::size_t>> springs;
  for (EdgeIndex e : view.edges) {
    std::size_t u = slot[g.source(e)], v = slot[g.target(e)];
    if (u != v) springs.emplace_back(u, v);
  }

  const double k = std::sqrt(1.0 / static_cast<double>(n));
  const double start_temp = 0.1;
  std::vector<double> dx(n), dy(n);
  for (unsigned iter = 0; iter < options.iterations; ++iter) {
    std::fill(dx.begin(), dx.end(), 0.0);
    std::fill(dy.begin(), dy.end(), 0.0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        double ddx = view.nodes[a].x - view.nodes[b].x;
        double ddy = view.nodes[a].y - view.nodes[b].y;
        double dist = std::max(std::hypot(ddx, ddy), 1e-9);
        double force = k * k / dist;
        dx[a] += ddx / dist * force;
        dy[a] += ddy / dist * force;
        dx[b] -= ddx / dist * force;
        dy[b] -= ddy / dist * force;
      }
    }
    for (auto [a, b] : springs) {
      double ddx = view.nodes[a].x - view.nodes[b].x;
      double ddy = view.nodes[a].y - view.nodes[b].y;
      double dist = std::max(std::hypot(ddx, ddy), 1e-9);
      double force = dist * dist / k;
      dx[a] -= ddx / dist * force;
      dy[a] -= ddy / dist * force;
      dx[b] += ddx / dist * force;
      dy[b] += ddy / dist * force;
    }
    double temp = start_temp * (1.0 - static_cast<double>(iter) /
                                          static_cast<double>(options.iterations));
    for (std::size_t a = 0; a < n; ++a) {
      double len = std::max(std::hypot(dx[a], dy[a]), 1e-12);
      double step = std::min(len, temp);
      view.nodes[a].x += dx[a] / len * step;
      view.nodes[a].y += dy[a] / len * step;
    }
  }
}

}  // namespace

SubgraphView extract_subgraph(const QueryResult& result,
                              std::span<const std::uint32_t> path_ids,
                              LayoutKind layout, std::string_view geo_attr,
                              const ForceLayoutOptions& options) {
  const Graph& g = *result.graph;
  std::vector<NodeIndex> nodes;
  std::vector<EdgeIndex> edges;
  for (std::uint32_t id : path_ids) {
    const Path& p = result.paths[id];
    nodes.insert(nodes.end(), p.nodes().begin(), p.nodes().end());
    edges.insert(edges.end(), p.edges().begin(), p.edges().end());
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  SubgraphView view;
  view.layout = layout;
  view.edges = std::move(edges);
  for (NodeIndex n : nodes) view.nodes.push_back({n, 0.0, 0.0});

  if (layout == LayoutKind::kForce) {
    force_layout(g, view, options);
    return view;
  }

  std::string missing;
  for (PlacedNode& p : view.nodes) {
    const AttrValue* v = g.node_attr(p.node, geo_attr);
    if (v == nullptr || v->kind() != AttrKind::kGeo) {
      missing += (missing.empty() ? "" : ", ") + g.node(p.node).id;
      continue;
    }
    p.x = v->point().lon;
    p.y = v->point().lat;
  }
  if (!missing.empty()) {
    throw SemanticError("spatial layout needs geo attribute '" +
                        std::string(geo_attr) + "' on nodes: " + missing);
  }
  return view;
}

}  // namespace connview
