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

#include "connview/export.h"

#include <charconv>

#include "connview/csv.h"

namespace connview {

using json = nlohmann::json;

std::string format_number(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

json attr_value_to_json(const AttrValue& v) {
  switch (v.kind()) {
    case AttrKind::kCategorical:
      return v.text();
    case AttrKind::kQuantitative:
      if (v.unit().empty()) return v.number();
      return json{{"value", v.number()}, {"unit", v.unit()}};
    case AttrKind::kGeo:
      return json{{"lat", v.point().lat}, {"lon", v.point().lon}};
  }
  return nullptr;
}

json attrs_to_json(const AttrMap& attrs) {
  json out = json::object();
  for (const auto& [name, value] : attrs) out[name] = attr_value_to_json(value);
  return out;
}

json metric_to_json(const MetricResult& r) {
  switch (r.kind) {
    case MetricResult::Kind::kUndefined:
      return json{{"kind", "undefined"}, {"value", nullptr}};
    case MetricResult::Kind::kScalar:
      return json{{"kind", "scalar"}, {"value", r.value}};
    case MetricResult::Kind::kVector:
      return json{{"kind", "vector"}, {"values", r.values}};
  }
  return nullptr;
}

namespace {

json key_to_json(const Graph& graph, const Axis& axis, const DisplayKey& d) {
  if (!d.group) {
    json k{{"id", d.id}, {"kind", "leaf"}};
    if (d.parent) k["parent"] = *d.parent;
    return k;
  }
  const AxisKey& key = axis.keys()[d.top];
  json members = json::array();
  for (NodeIndex m : key.members) members.push_back(graph.node(m).id);
  return json{{"id", d.id},
              {"kind", "group"},
              {"attribute", key.attribute},
              {"value", key.value},
              {"members", std::move(members)},
              {"expanded", key.expanded}};
}

json quantitative_attrs(const Graph& graph, const Axis& axis) {
  json out = json::object();
  for (const DisplayKey& d : axis.displayed()) {
    std::vector<NodeIndex> nodes;
    if (d.group) {
      nodes = axis.keys()[d.top].members;
    } else {
      nodes.push_back(d.node);
    }
    json attrs = json::object();
    for (const auto& [name, kind] : graph.schema().node_attrs) {
      if (kind != AttrKind::kQuantitative) continue;
      json values = json::array();
      for (NodeIndex n : nodes) {
        if (const AttrValue* v = graph.node_attr(n, name)) {
          values.push_back(v->number());
        }
      }
      if (!values.empty()) attrs[name] = std::move(values);
    }
    if (!attrs.empty()) out[d.id] = std::move(attrs);
  }
  return out;
}

std::string metric_cell_csv(const MetricResult& r) {
  switch (r.kind) {
    case MetricResult::Kind::kUndefined:
      return {};
    case MetricResult::Kind::kScalar:
      return format_number(r.value);
    case MetricResult::Kind::kVector: {
      std::string out;
      for (std::size_t i = 0; i < r.values.size(); ++i) {
        if (i > 0) out += ';';
        out += format_number(r.values[i]);
      }
      return out;
    }
  }
  return {};
}

}  // namespace

json axis_keys_to_json(const Graph& graph, const Axis& axis) {
  json keys = json::array();
  for (const DisplayKey& d : axis.displayed()) {
    keys.push_back(key_to_json(graph, axis, d));
  }
  return keys;
}

json matrix_to_json(const ConnectivityMatrix& matrix, const Metric& metric) {
  const Graph& g = *matrix.source().graph;
  const auto& rows = matrix.rows().displayed();
  const auto& cols = matrix.cols().displayed();
  json cells = json::array();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      auto ids = matrix.cell(r, c);
      cells.push_back(
          {{"r", rows[r].id},
           {"c", cols[c].id},
           {"metric",
            metric_to_json(evaluate_metric(metric, matrix.source(), ids))},
           {"count", ids.size()},
           {"aggregated", rows[r].group || cols[c].group}});
    }
  }
  return json{{"metric", metric.describe()},
              {"rows", axis_keys_to_json(g, matrix.rows())},
              {"cols", axis_keys_to_json(g, matrix.cols())},
              {"cells", std::move(cells)},
              {"rowAttrs", quantitative_attrs(g, matrix.rows())},
              {"colAttrs", quantitative_attrs(g, matrix.cols())}};
}

json table_to_json(const IntermediateTable& table, const Metric& metric) {
  const Graph& g = *table.source().graph;
  const auto& rows = table.rows().displayed();
  json cols = json::array();
  for (const TablePosition& p : table.columns()) {
    cols.push_back(
        {{"id", p.id()}, {"position", p.position}, {"length", p.length}});
  }
  json cells = json::array();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < table.columns().size(); ++c) {
      auto ids = table.cell(r, c);
      cells.push_back(
          {{"r", rows[r].id},
           {"c", table.columns()[c].id()},
           {"metric",
            metric_to_json(evaluate_metric(metric, table.source(), ids))},
           {"count", ids.size()},
           {"aggregated", rows[r].group}});
    }
  }
  return json{{"metric", metric.describe()},
              {"rows", axis_keys_to_json(g, table.rows())},
              {"cols", std::move(cols)},
              {"cells", std::move(cells)},
              {"rowAttrs", quantitative_attrs(g, table.rows())}};
}

std::string matrix_to_csv(const ConnectivityMatrix& matrix,
                          const Metric& metric) {
  std::string out;
  for (const DisplayKey& c : matrix.cols().displayed()) {
    out += "," + csv_escape(c.id);
  }
  out += "\n";
  const auto& rows = matrix.rows().displayed();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out += csv_escape(rows[r].id);
    for (std::size_t c = 0; c < matrix.cols().displayed().size(); ++c) {
      out += "," + metric_cell_csv(evaluate_metric(metric, matrix.source(),
                                                   matrix.cell(r, c)));
    }
    out += "\n";
  }
  return out;
}

std::string table_to_csv(const IntermediateTable& table, const Metric& metric) {
  std::string out;
  for (const TablePosition& p : table.columns()) out += "," + csv_escape(p.id());
  out += "\n";
  const auto& rows = table.rows().displayed();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out += csv_escape(rows[r].id);
    for (std::size_t c = 0; c < table.columns().size(); ++c) {
      out += "," + metric_cell_csv(evaluate_metric(metric, table.source(),
                                                   table.cell(r, c)));
    }
    out += "\n";
  }
  return out;
}

json summary_to_json(const QueryResult& result) {
  json lengths = json::object();
  for (auto [len, count] : result.length_histogram()) {
    lengths[std::to_string(len)] = count;
  }
  return json{{"startNodes", result.start_nodes.size()},
              {"endNodes", result.end_nodes.size()},
              {"paths", result.paths.size()},
              {"maxLength", result.max_length()},
              {"lengths", std::move(lengths)}};
}

json path_to_json(const QueryResult& result, std::uint32_t path_id) {
  const Graph& g = *result.graph;
  const Path& p = result.paths[path_id];
  json nodes = json::array();
  for (NodeIndex n : p.nodes()) nodes.push_back(g.node(n).id);
  json edges = json::array();
  for (EdgeIndex e : p.edges()) {
    const Edge& edge = g.edge(e);
    edges.push_back({{"id", edge.id},
                     {"source", edge.source},
                     {"target", edge.target},
                     {"attrs", attrs_to_json(edge.attrs)}});
  }
  return json{{"index", path_id},
              {"nodes", std::move(nodes)},
              {"edges", std::move(edges)}};
}

json motifs_to_json(const QueryResult& result, const std::vector<Motif>& motifs,
                    std::string_view display_attr) {
  json list = json::array();
  std::size_t total = 0;
  for (const Motif& m : motifs) {
    json paths = json::array();
    for (std::uint32_t id : m.members) paths.push_back(path_to_json(result, id));
    total += m.members.size();
    list.push_back(
        {{"key", m.key}, {"count", m.members.size()}, {"paths", std::move(paths)}});
  }
  return json{{"groupBy", display_attr},
              {"total", total},
              {"motifs", std::move(list)}};
}

json subgraph_to_json(const QueryResult& result, const SubgraphView& view) {
  const Graph& g = *result.graph;
  json nodes = json::array();
  for (const PlacedNode& p : view.nodes) {
    nodes.push_back({{"id", g.node(p.node).id},
                     {"x", p.x},
                     {"y", p.y},
                     {"attrs", attrs_to_json(g.node(p.node).attrs)}});
  }
  json edges = json::array();
  for (EdgeIndex e : view.edges) {
    const Edge& edge = g.edge(e);
    edges.push_back({{"id", edge.id},
                     {"source", edge.source},
                     {"target", edge.target},
                     {"attrs", attrs_to_json(edge.attrs)}});
  }
  return json{{"layout", view.layout == LayoutKind::kForce ? "force" : "spatial"},
              {"nodes", std::move(nodes)},
              {"edges", std::move(edges)}};
}

json cells_to_json(const std::vector<CellRef>& cells) {
  json out = json::array();
  for (const CellRef& c : cells) out.push_back({{"r", c.row}, {"c", c.col}});
  return out;
}

}  // namespace connview
