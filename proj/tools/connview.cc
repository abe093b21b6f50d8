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

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "connview/details.h"
#include "connview/enumerate.h"
#include "connview/error.h"
#include "connview/export.h"
#include "connview/ingestion.h"
#include "connview/overview.h"
#include "connview/seriation.h"
#include "connview/service.h"

namespace {

using namespace connview;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitCap = 3;

struct GraphArgs {
  std::string graph;
  std::string nodes;
  std::string edges;
  std::string flights;
  std::string airports;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--graph", graph, "Graph JSON file");
    cmd->add_option("--nodes", nodes, "Typed nodes CSV")->needs(
        cmd->add_option("--edges", edges, "Typed edges CSV"));
    cmd->add_option("--flights", flights, "BTS on-time performance CSV");
    cmd->add_option("--airports", airports, "Airport coordinates CSV");
  }

  std::shared_ptr<const Graph> load() const {
    int sources = !graph.empty() + !nodes.empty() + !flights.empty();
    if (sources != 1) {
      throw CLI::ValidationError(
          "exactly one of --graph, --nodes/--edges or --flights is required");
    }
    if (!graph.empty()) return std::make_shared<const Graph>(load_json(graph));
    if (!nodes.empty()) {
      return std::make_shared<const Graph>(load_csv(nodes, edges));
    }
    return std::make_shared<const Graph>(load_flights(flights, airports));
  }
};

struct QueryArgs {
  std::string dsl;
  std::string dsl_file;
  std::size_t cap = kDefaultResultCap;
  unsigned threads = 0;

  void add_to(CLI::App* cmd) {
    auto* inline_dsl = cmd->add_option("--dsl", dsl, "Query text");
    cmd->add_option("--dsl-file", dsl_file, "File holding the query text")
        ->excludes(inline_dsl);
    cmd->add_option("--cap", cap, "Result cap")->check(CLI::PositiveNumber);
    cmd->add_option("--threads", threads, "Enumeration threads (0 = auto)");
  }

  std::string text() const {
    if (dsl.empty() && dsl_file.empty()) {
      throw CLI::ValidationError("--dsl or --dsl-file is required");
    }
    return dsl_file.empty() ? dsl : read_file(dsl_file);
  }
};

struct ViewArgs {
  std::string format = "csv";
  std::string metric = "count";
  std::string group_rows;
  std::string group_cols;
  std::vector<std::string> expand;
  bool expand_all = false;

  void add_to(CLI::App* cmd, bool matrix, bool with_format = true) {
    if (with_format) {
      cmd->add_option("--format", format, "csv or json")
          ->check(CLI::IsMember({"csv", "json"}));
    }
    cmd->add_option("--metric", metric,
                    "count, min_length, per_length, fraction(edge.A OP V)");
    cmd->add_option("--group-rows", group_rows, "Aggregate rows by attribute");
    if (matrix) {
      cmd->add_option("--group-cols", group_cols,
                      "Aggregate columns by attribute");
    }
    cmd->add_option("--expand", expand, "Expand a row group, e.g. [region=west]");
    cmd->add_flag("--expand-all", expand_all, "Expand every row group");
  }
};

/// Source text of the expression being parsed, for caret diagnostics.
std::string g_parse_source;

std::shared_ptr<const QueryResult> run_query(const GraphArgs& g,
                                             const QueryArgs& q) {
  auto graph = g.load();
  g_parse_source = q.text();
  PathQuery query = parse_query(g_parse_source);
  query.result_cap = q.cap;
  return std::make_shared<const QueryResult>(
      enumerate_paths(graph, query, {.threads = q.threads, .stop = {}}));
}

Metric load_metric(const std::string& text, const Graph& graph) {
  g_parse_source = text;
  Metric metric = parse_metric(text);
  validate_metric(graph, metric);
  return metric;
}

ConnectivityMatrix build_matrix(std::shared_ptr<const QueryResult> r,
                                const ViewArgs& v) {
  auto m = ConnectivityMatrix::build(std::move(r));
  if (!v.group_rows.empty()) m = m.aggregated(AxisSide::kRows, v.group_rows);
  if (!v.group_cols.empty()) m = m.aggregated(AxisSide::kCols, v.group_cols);
  if (v.expand_all) m = m.all_expanded(AxisSide::kRows);
  for (const auto& id : v.expand) m = m.expanded(AxisSide::kRows, id);
  return m;
}

IntermediateTable build_table(std::shared_ptr<const QueryResult> r,
                              const ViewArgs& v) {
  auto t = IntermediateTable::build(std::move(r));
  if (!v.group_rows.empty()) t = t.aggregated(v.group_rows);
  if (v.expand_all) t = t.all_expanded();
  for (const auto& id : v.expand) t = t.expanded(id);
  return t;
}

void print_caret(const ParseError& e) {
  std::cerr << "error: " << e.what() << "\n";
  std::size_t line = 1;
  std::size_t begin = 0;
  while (line < e.line() && begin < g_parse_source.size()) {
    std::size_t nl = g_parse_source.find('\n', begin);
    if (nl == std::string::npos) break;
    begin = nl + 1;
    ++line;
  }
  std::size_t end = g_parse_source.find('\n', begin);
  std::cerr << "  " << g_parse_source.substr(begin, end - begin) << "\n"
            << "  " << std::string(e.column() > 0 ? e.column() - 1 : 0, ' ')
            << "^\n";
}

int cmd_ingest(const GraphArgs& g, const std::string& out) {
  auto graph = g.load();
  if (!out.empty()) {
    std::ofstream file(out, std::ios::binary);
    if (!file) throw DataError("cannot write '" + out + "'");
    file << export_json(*graph);
  }
  std::cout << "nodes=" << graph->node_count() << "\n"
            << "edges=" << graph->edge_count() << "\n";
  return kExitOk;
}

int cmd_query(const GraphArgs& g, const QueryArgs& q) {
  auto r = run_query(g, q);
  std::cout << "paths=" << r->paths.size() << "\n"
            << "start_nodes=" << r->start_nodes.size() << "\n"
            << "end_nodes=" << r->end_nodes.size() << "\n";
  for (auto [len, count] : r->length_histogram()) {
    std::cout << "length." << len << "=" << count << "\n";
  }
  return kExitOk;
}

void emit_matrix(const ConnectivityMatrix& m, const ViewArgs& v) {
  Metric metric = load_metric(v.metric, *m.source().graph);
  if (v.format == "json") {
    std::cout << matrix_to_json(m, metric).dump(2) << "\n";
  } else {
    std::cout << matrix_to_csv(m, metric);
  }
}

void emit_table(const IntermediateTable& t, const ViewArgs& v) {
  Metric metric = load_metric(v.metric, *t.source().graph);
  if (v.format == "json") {
    std::cout << table_to_json(t, metric).dump(2) << "\n";
  } else {
    std::cout << table_to_csv(t, metric);
  }
}

int cmd_view(const GraphArgs& g, const QueryArgs& q, const ViewArgs& v,
             bool matrix) {
  auto r = run_query(g, q);
  if (matrix) {
    emit_matrix(build_matrix(r, v), v);
  } else {
    emit_table(build_table(r, v), v);
  }
  return kExitOk;
}

struct ReorderArgs {
  std::string view = "matrix";
  std::string axis = "rows";
  std::string by = "olo";
  std::string attribute;
  bool descending = false;
  std::string olo_metric = "count";
};

int cmd_reorder(const GraphArgs& g, const QueryArgs& q, const ViewArgs& v,
                const ReorderArgs& a) {
  auto r = run_query(g, q);
  ReorderStrategy strategy;
  if (a.by == "attribute") {
    if (a.attribute.empty()) {
      throw CLI::ValidationError("--attribute is required with --by attribute");
    }
    strategy = AttributeSort{a.attribute, a.descending};
  } else {
    strategy = OptimalLeafOrdering{load_metric(a.olo_metric, *r->graph)};
  }
  if (a.view == "table") {
    auto t = build_table(r, v);
    emit_table(t.permuted(reorder(t, strategy)), v);
  } else {
    AxisSide side = a.axis == "cols" ? AxisSide::kCols : AxisSide::kRows;
    auto m = build_matrix(r, v);
    emit_matrix(m.permuted(side, reorder(m, side, strategy)), v);
  }
  return kExitOk;
}

struct PathsArgs {
  std::string view = "matrix";
  std::string row;
  std::string col;
  std::string group_by = "id";
  std::string format = "text";
};

int cmd_paths(const GraphArgs& g, const QueryArgs& q, const ViewArgs& v,
              const PathsArgs& a) {
  auto r = run_query(g, q);
  auto m = build_matrix(r, v);
  auto t = build_table(r, v);
  SelectedCell cell{a.view == "table" ? SelectedCell::View::kTable
                                      : SelectedCell::View::kMatrix,
                    {a.row, a.col}};
  PathIds ids = resolve_selection(m, t, {cell});
  auto motifs = group_by_motif(*r, ids, a.group_by);
  if (a.format == "json") {
    std::cout << motifs_to_json(*r, motifs, a.group_by).dump(2) << "\n";
    return kExitOk;
  }
  for (const Motif& motif : motifs) {
    std::string key;
    for (const auto& part : motif.key) key += (key.empty() ? "" : ">") + part;
    std::cout << key << "\t" << motif.members.size() << "\n";
    for (std::uint32_t id : motif.members) {
      std::string edges;
      for (EdgeIndex e : r->paths[id].edges()) {
        edges += (edges.empty() ? "" : ",") + r->graph->edge(e).id;
      }
      std::cout << "  " << describe(*r->graph, r->paths[id]) << "\t" << edges
                << "\n";
    }
  }
  return kExitOk;
}

struct ServeArgs {
  std::string config;
  std::string listen;
  int port = -1;
  std::string dataset_dir;
  std::size_t cap = 0;
};

int cmd_serve(const ServeArgs& a) {
  ServiceConfig config =
      a.config.empty() ? ServiceConfig{} : load_service_config(a.config);
  if (!a.listen.empty()) config.listen = a.listen;
  if (a.port >= 0) config.port = a.port;
  if (!a.dataset_dir.empty()) config.dataset_dir = a.dataset_dir;
  if (a.cap > 0) config.result_cap = a.cap;
  Service service(config);
  HttpServer server(service);
  std::cerr << "listening on " << config.listen << ":" << config.port << "\n";
  server.run(config.listen, config.port);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path query and connectivity overview tool"};
  app.require_subcommand(1);

  GraphArgs graph;
  QueryArgs query;
  ViewArgs view;
  ReorderArgs reorder_args;
  PathsArgs paths_args;
  ServeArgs serve_args;
  std::string ingest_out;

  auto* ingest = app.add_subcommand("ingest", "Load and validate a graph");
  graph.add_to(ingest);
  ingest->add_option("--out", ingest_out, "Write the graph as JSON");

  auto* query_cmd = app.add_subcommand("query", "Run a path query");
  graph.add_to(query_cmd);
  query.add_to(query_cmd);

  auto* matrix_cmd = app.add_subcommand("matrix", "Connectivity matrix");
  graph.add_to(matrix_cmd);
  query.add_to(matrix_cmd);
  view.add_to(matrix_cmd, true);

  auto* table_cmd = app.add_subcommand("table", "Intermediate node table");
  graph.add_to(table_cmd);
  query.add_to(table_cmd);
  view.add_to(table_cmd, false);

  auto* reorder_cmd = app.add_subcommand("reorder", "Reordered matrix or table");
  graph.add_to(reorder_cmd);
  query.add_to(reorder_cmd);
  view.add_to(reorder_cmd, true);
  reorder_cmd->add_option("--view", reorder_args.view)
      ->check(CLI::IsMember({"matrix", "table"}));
  reorder_cmd->add_option("--axis", reorder_args.axis)
      ->check(CLI::IsMember({"rows", "cols"}));
  reorder_cmd->add_option("--by", reorder_args.by, "olo or attribute")
      ->check(CLI::IsMember({"olo", "attribute"}));
  reorder_cmd->add_option("--attribute", reorder_args.attribute);
  reorder_cmd->add_flag("--descending", reorder_args.descending);
  reorder_cmd->add_option("--olo-metric", reorder_args.olo_metric);

  auto* paths_cmd = app.add_subcommand("paths", "Motif listing for a cell");
  graph.add_to(paths_cmd);
  query.add_to(paths_cmd);
  view.add_to(paths_cmd, true, false);
  paths_cmd->add_option("--view", paths_args.view)
      ->check(CLI::IsMember({"matrix", "table"}));
  paths_cmd->add_option("--row", paths_args.row)->required();
  paths_cmd->add_option("--col", paths_args.col)->required();
  paths_cmd->add_option("--group-by", paths_args.group_by);
  paths_cmd->add_option("--format", paths_args.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* serve = app.add_subcommand("serve", "Run the HTTP JSON service");
  serve->add_option("--config", serve_args.config, "Config JSON file");
  serve->add_option("--listen", serve_args.listen);
  serve->add_option("--port", serve_args.port);
  serve->add_option("--dataset-dir", serve_args.dataset_dir);
  serve->add_option("--cap", serve_args.cap);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*ingest) return cmd_ingest(graph, ingest_out);
    if (*query_cmd) return cmd_query(graph, query);
    if (*matrix_cmd) return cmd_view(graph, query, view, true);
    if (*table_cmd) return cmd_view(graph, query, view, false);
    if (*reorder_cmd) return cmd_reorder(graph, query, view, reorder_args);
    if (*paths_cmd) return cmd_paths(graph, query, view, paths_args);
    if (*serve) return cmd_serve(serve_args);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const connview::ParseError& e) {
    print_caret(e);
    return kExitData;
  } catch (const ResultCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const connview::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
