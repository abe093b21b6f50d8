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

#include "connview/service.h"

#include <algorithm>
#include <condition_variable>
#include <fstream>
#include <optional>
#include <thread>

#include "connview/details.h"
#include "connview/enumerate.h"
#include "connview/error.h"
#include "connview/export.h"
#include "connview/highlight.h"
#include "connview/ingestion.h"
#include "connview/overview.h"
#include "connview/seriation.h"

namespace connview {

using json = nlohmann::json;

namespace {

class BadRequest : public Error {
 public:
  using Error::Error;
};

class Conflict : public Error {
 public:
  using Error::Error;
};

ApiResponse error_response(int status, std::string_view type,
                           const std::string& message, json extra = {}) {
  json err{{"type", type}, {"message", message}};
  if (extra.is_object()) err.update(extra);
  return {status, json{{"error", std::move(err)}}};
}

ApiResponse from_exception(std::exception_ptr ptr) {
  try {
    std::rethrow_exception(ptr);
  } catch (const ParseError& e) {
    return error_response(400, "parse", e.what(),
                          {{"detail", e.detail()},
                           {"line", e.line()},
                           {"column", e.column()}});
  } catch (const ResultCapExceeded& e) {
    return error_response(409, "result_cap", e.what(),
                          {{"cap", e.cap()}, {"reached", e.reached()}});
  } catch (const Cancelled& e) {
    return error_response(409, "cancelled", e.what());
  } catch (const Conflict& e) {
    return error_response(409, "conflict", e.what());
  } catch (const NotFoundError& e) {
    return error_response(404, "not_found", e.what());
  } catch (const SemanticError& e) {
    return error_response(422, "semantic", e.what());
  } catch (const DataError& e) {
    return error_response(422, "data", e.what());
  } catch (const BadRequest& e) {
    return error_response(400, "bad_request", e.what());
  } catch (const json::exception& e) {
    return error_response(400, "bad_request", e.what());
  } catch (const std::invalid_argument& e) {
    return error_response(400, "bad_request", e.what());
  } catch (const std::exception& e) {
    return error_response(500, "internal", e.what());
  }
}

json parse_body(const std::string& text) {
  if (text.empty()) return json::object();
  json body;
  try {
    body = json::parse(text);
  } catch (const json::parse_error& e) {
    throw BadRequest(std::string("malformed JSON body: ") + e.what());
  }
  if (!body.is_object()) throw BadRequest("request body must be an object");
  return body;
}

std::string string_field(const json& body, const char* key) {
  auto it = body.find(key);
  if (it == body.end() || !it->is_string()) {
    throw BadRequest(std::string("field '") + key + "' must be a string");
  }
  return it->get<std::string>();
}

std::string optional_string(const json& body, const char* key,
                            std::string fallback = {}) {
  auto it = body.find(key);
  if (it == body.end() || it->is_null()) return fallback;
  if (!it->is_string()) {
    throw BadRequest(std::string("field '") + key + "' must be a string");
  }
  return it->get<std::string>();
}

bool optional_bool(const json& body, const char* key, bool fallback) {
  auto it = body.find(key);
  if (it == body.end()) return fallback;
  if (!it->is_boolean()) {
    throw BadRequest(std::string("field '") + key + "' must be a boolean");
  }
  return it->get<bool>();
}

AxisSide axis_field(const json& body, bool table) {
  std::string axis = optional_string(body, "axis", "rows");
  if (axis == "rows") return AxisSide::kRows;
  if (axis == "cols" && !table) return AxisSide::kCols;
  throw BadRequest("axis must be " +
                   std::string(table ? "\"rows\"" : "\"rows\" or \"cols\""));
}

bool truthy(const std::map<std::string, std::string>& params,
            const std::string& key) {
  auto it = params.find(key);
  return it != params.end() && (it->second == "1" || it->second == "true");
}

std::filesystem::path dataset_path(const std::filesystem::path& dir,
                                   const std::string& relative) {
  std::filesystem::path rel(relative);
  rel = rel.lexically_normal();
  if (rel.empty() || rel.is_absolute() || *rel.begin() == "..") {
    throw BadRequest("dataset path '" + relative +
                     "' must stay inside the dataset directory");
  }
  return dir / rel;
}

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::size_t i = 0;
  while (i < path.size()) {
    std::size_t j = path.find('/', i);
    if (j == std::string::npos) j = path.size();
    if (j > i) parts.push_back(path.substr(i, j - i));
    i = j + 1;
  }
  return parts;
}

}  // namespace

// ---------------------------------------------------------------------------
// Configuration

ServiceConfig parse_service_config(const json& doc,
                                   const std::filesystem::path& base_dir) {
  if (!doc.is_object()) throw DataError("config: expected an object");
  ServiceConfig c;
  c.listen = doc.value("listen", c.listen);
  c.port = doc.value("port", c.port);
  c.result_cap = doc.value("resultCap", c.result_cap);
  c.threads = doc.value("threads", c.threads);
  std::filesystem::path dir = doc.value("datasetDir", std::string("."));
  c.dataset_dir = dir.is_absolute() ? dir : base_dir / dir;
  if (auto it = doc.find("datasets"); it != doc.end()) {
    if (!it->is_array()) throw DataError("config: datasets must be an array");
    for (const json& d : *it) c.datasets.push_back(d);
  }
  if (c.result_cap == 0) throw DataError("config: resultCap must be positive");
  return c;
}

ServiceConfig load_service_config(const std::filesystem::path& file) {
  json doc;
  try {
    doc = json::parse(read_file(file));
  } catch (const json::exception& e) {
    throw DataError("config '" + file.string() + "': " + e.what());
  }
  return parse_service_config(doc, file.parent_path().empty()
                                       ? std::filesystem::path(".")
                                       : file.parent_path());
}

// ---------------------------------------------------------------------------
// State

struct Service::Dataset {
  std::string id;
  std::shared_ptr<const Graph> graph;
  std::string motif_attribute = "id";
  std::string geo_attribute = "loc";

  json describe() const {
    auto kinds = [](const AttrSchema& s) {
      json out = json::object();
      for (const auto& [name, kind] : s) out[name] = to_string(kind);
      return out;
    };
    return json{{"id", id},
                {"nodes", graph->node_count()},
                {"edges", graph->edge_count()},
                {"schema",
                 {{"nodes", kinds(graph->schema().node_attrs)},
                  {"edges", kinds(graph->schema().edge_attrs)}}},
                {"motifAttribute", motif_attribute},
                {"geoAttribute", geo_attribute}};
  }
};

struct Service::Session {
  std::string id;
  /// Serializes view-state reads and writes of the session's queries.
  std::mutex views;
  /// dataset + cap + normalized DSL -> query id.
  std::map<std::string, std::string> cache;
};

struct Service::QueryEntry {
  enum class State { kRunning, kDone, kFailed, kCancelled };

  std::string id;
  std::shared_ptr<Session> session;
  std::shared_ptr<Dataset> dataset;
  std::string dsl;
  std::string cache_key;
  PathQuery query;

  std::mutex mu;
  std::condition_variable cv;
  State state = State::kRunning;
  std::shared_ptr<const QueryResult> result;
  ApiResponse failure;
  std::jthread worker;

  // Guarded by session->views.
  std::optional<ConnectivityMatrix> matrix;
  std::optional<IntermediateTable> table;
  json selection_cells = json::array();
  PathIds selection;

  State wait() {
    std::unique_lock lock(mu);
    cv.wait(lock, [&] { return state != State::kRunning; });
    return state;
  }

  State current() {
    std::lock_guard lock(mu);
    return state;
  }

  json status_json() {
    std::lock_guard lock(mu);
    static constexpr const char* kNames[] = {"running", "done", "failed",
                                             "cancelled"};
    json out{{"id", id},
             {"dataset", dataset->id},
             {"session", session->id},
             {"dsl", dsl},
             {"status", kNames[static_cast<int>(state)]}};
    if (state == State::kDone) out["summary"] = summary_to_json(*result);
    if (state == State::kFailed || state == State::kCancelled) {
      out["error"] = failure.body["error"];
    }
    return out;
  }

  /// Finished result, or throws the stored failure.
  const std::shared_ptr<const QueryResult>& finished() {
    State s = wait();
    if (s != State::kDone) throw failure;
    return result;
  }

  ConnectivityMatrix& matrix_view() {
    if (!matrix) matrix = ConnectivityMatrix::build(finished());
    return *matrix;
  }

  IntermediateTable& table_view() {
    if (!table) table = IntermediateTable::build(finished());
    return *table;
  }
};

Service::Service(ServiceConfig config) : config_(std::move(config)) {
  auto session = std::make_shared<Session>();
  session->id = "default";
  sessions_.emplace(session->id, session);
  for (const json& spec : config_.datasets) {
    ApiResponse r = handle({"POST", "/api/datasets", {}, spec.dump()});
    if (r.status != 200) {
      throw DataError("cannot load configured dataset: " +
                      r.body["error"]["message"].get<std::string>());
    }
  }
}

Service::~Service() {
  std::vector<std::shared_ptr<QueryEntry>> entries;
  {
    std::lock_guard lock(mu_);
    for (auto& [id, e] : queries_) entries.push_back(e);
    queries_.clear();
  }
  for (auto& e : entries) e->worker.request_stop();
  for (auto& e : entries) {
    if (e->worker.joinable()) e->worker.join();
  }
}

void Service::register_metric(std::string name, CustomMetricFn fn) {
  std::lock_guard lock(mu_);
  metrics_.add(std::move(name), std::move(fn));
}

ApiResponse Service::handle(const ApiRequest& request) {
  try {
    return route(request);
  } catch (const ApiResponse& stored) {
    return stored;
  } catch (...) {
    return from_exception(std::current_exception());
  }
}

ApiResponse Service::route(const ApiRequest& req) {
  std::vector<std::string> parts = split_path(req.path);
  if (parts.size() < 2 || parts[0] != "api") {
    throw NotFoundError("unknown route '" + req.path + "'");
  }
  const std::string& m = req.method;
  if (parts[1] == "datasets") {
    if (parts.size() == 2 && m == "POST") return post_dataset(parse_body(req.body));
    if (parts.size() == 3 && m == "GET") return get_dataset(parts[2]);
  } else if (parts[1] == "sessions") {
    if (parts.size() == 2 && m == "POST") return post_session();
  } else if (parts[1] == "queries") {
    if (parts.size() == 2 && m == "POST") return post_query(parse_body(req.body));
    if (parts.size() == 3 && m == "GET") {
      return get_query(parts[2], truthy(req.params, "wait"));
    }
    if (parts.size() == 3 && m == "DELETE") return delete_query(parts[2]);
    if (parts.size() >= 4) return query_route(req, parts);
  }
  throw NotFoundError("unknown route " + m + " '" + req.path + "'");
}

std::shared_ptr<Service::Dataset> Service::find_dataset(const std::string& id) {
  std::lock_guard lock(mu_);
  auto it = datasets_.find(id);
  if (it == datasets_.end()) throw NotFoundError("unknown dataset '" + id + "'");
  return it->second;
}

std::shared_ptr<Service::QueryEntry> Service::find_query(const std::string& id) {
  std::lock_guard lock(mu_);
  auto it = queries_.find(id);
  if (it == queries_.end()) throw NotFoundError("unknown query '" + id + "'");
  return it->second;
}

std::shared_ptr<Service::Session> Service::find_session(const std::string& id) {
  std::lock_guard lock(mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw NotFoundError("unknown session '" + id + "'");
  return it->second;
}

Metric Service::metric_param(const ApiRequest& req, const Graph& graph) const {
  auto it = req.params.find("metric");
  std::string text = it == req.params.end() ? "count" : it->second;
  Metric metric = parse_metric(text, &metrics_);
  validate_metric(graph, metric);
  return metric;
}

// ---------------------------------------------------------------------------
// Datasets and sessions

ApiResponse Service::post_dataset(const json& body) {
  std::string format = optional_string(body, "format", "json");
  const auto& dir = config_.dataset_dir;
  Graph graph;
  if (format == "json") {
    graph = load_json(dataset_path(dir, string_field(body, "path")));
  } else if (format == "csv") {
    graph = load_csv(dataset_path(dir, string_field(body, "nodes")),
                     dataset_path(dir, string_field(body, "edges")));
  } else if (format == "flights") {
    std::string airports = optional_string(body, "airports");
    graph = load_flights(dataset_path(dir, string_field(body, "path")),
                         airports.empty() ? std::filesystem::path()
                                          : dataset_path(dir, airports));
  } else if (format == "inline") {
    auto it = body.find("graph");
    if (it == body.end() || !it->is_object()) {
      throw BadRequest("field 'graph' must be an object");
    }
    graph = parse_json_graph(it->dump());
  } else {
    throw BadRequest("format must be json, csv, flights or inline");
  }

  auto ds = std::make_shared<Dataset>();
  ds->graph = std::make_shared<const Graph>(std::move(graph));
  ds->motif_attribute = optional_string(body, "motifAttribute", "id");
  ds->geo_attribute = optional_string(body, "geoAttribute", "loc");
  std::lock_guard lock(mu_);
  ds->id = optional_string(body, "id");
  if (ds->id.empty()) {
    do {
      ds->id = "d" + std::to_string(next_dataset_++);
    } while (datasets_.count(ds->id));
  }
  if (datasets_.count(ds->id)) {
    throw Conflict("dataset '" + ds->id + "' already exists");
  }
  datasets_.emplace(ds->id, ds);
  return {200, ds->describe()};
}

ApiResponse Service::get_dataset(const std::string& id) {
  return {200, find_dataset(id)->describe()};
}

ApiResponse Service::post_session() {
  auto session = std::make_shared<Session>();
  std::lock_guard lock(mu_);
  session->id = "s" + std::to_string(next_session_++);
  sessions_.emplace(session->id, session);
  return {200, json{{"id", session->id}}};
}

// ---------------------------------------------------------------------------
// Queries

ApiResponse Service::post_query(const json& body) {
  auto dataset = find_dataset(string_field(body, "dataset"));
  auto session = find_session(optional_string(body, "session", "default"));
  PathQuery query = parse_query(string_field(body, "dsl"));
  validate_query(*dataset->graph, query);
  query.result_cap = config_.result_cap;
  if (auto it = body.find("resultCap"); it != body.end()) {
    if (!it->is_number_unsigned() || it->get<std::size_t>() == 0) {
      throw BadRequest("resultCap must be a positive integer");
    }
    query.result_cap = it->get<std::size_t>();
  }
  bool async = optional_bool(body, "async", false);

  std::string dsl = to_dsl(query);
  std::string key = dataset->id + "\n" + std::to_string(query.result_cap) +
                    "\n" + dsl;
  std::shared_ptr<QueryEntry> entry;
  {
    std::lock_guard lock(mu_);
    auto cached = session->cache.find(key);
    if (cached != session->cache.end()) {
      entry = queries_.at(cached->second);
    } else {
      entry = std::make_shared<QueryEntry>();
      entry->id = "q" + std::to_string(next_query_++);
      entry->session = session;
      entry->dataset = dataset;
      entry->dsl = dsl;
      entry->cache_key = key;
      entry->query = query;
      session->cache.emplace(key, entry->id);
      queries_.emplace(entry->id, entry);

      unsigned threads = config_.threads;
      QueryEntry* raw = entry.get();
      entry->worker = std::jthread([raw, threads](std::stop_token stop) {
        std::shared_ptr<const QueryResult> result;
        ApiResponse failure;
        auto state = QueryEntry::State::kDone;
        try {
          result = std::make_shared<const QueryResult>(enumerate_paths(
              raw->dataset->graph, raw->query, {threads, stop}));
        } catch (const Cancelled&) {
          failure = from_exception(std::current_exception());
          state = QueryEntry::State::kCancelled;
        } catch (...) {
          failure = from_exception(std::current_exception());
          state = QueryEntry::State::kFailed;
        }
        std::lock_guard lock(raw->mu);
        raw->result = std::move(result);
        raw->failure = std::move(failure);
        raw->state = state;
        raw->cv.notify_all();
      });
    }
  }
  if (async) return {200, entry->status_json()};
  if (entry->wait() != QueryEntry::State::kDone) {
    ApiResponse r = entry->failure;
    r.body["error"]["query"] = entry->id;
    return r;
  }
  return {200, entry->status_json()};
}

ApiResponse Service::get_query(const std::string& id, bool wait) {
  auto entry = find_query(id);
  if (wait) entry->wait();
  return {200, entry->status_json()};
}

ApiResponse Service::delete_query(const std::string& id) {
  std::shared_ptr<QueryEntry> entry;
  {
    std::lock_guard lock(mu_);
    auto it = queries_.find(id);
    if (it == queries_.end()) throw NotFoundError("unknown query '" + id + "'");
    entry = it->second;
    queries_.erase(it);
    entry->session->cache.erase(entry->cache_key);
  }
  bool was_running = entry->current() == QueryEntry::State::kRunning;
  entry->worker.request_stop();
  if (entry->worker.joinable()) entry->worker.join();
  return {200, json{{"id", id}, {"status", was_running ? "cancelled" : "deleted"}}};
}

ApiResponse Service::query_route(const ApiRequest& req,
                                 const std::vector<std::string>& parts) {
  auto entry = find_query(parts[2]);
  const std::shared_ptr<const QueryResult>& result = entry->finished();
  const Graph& graph = *result->graph;
  const std::string& view = parts[3];
  const std::string& m = req.method;
  std::lock_guard views(entry->session->views);

  auto view_json = [&](bool table, const Metric& metric) {
    json out = table ? table_to_json(entry->table_view(), metric)
                     : matrix_to_json(entry->matrix_view(), metric);
    out["query"] = entry->id;
    return out;
  };

  if ((view == "matrix" || view == "table") && parts.size() == 4 && m == "GET") {
    return {200, view_json(view == "table", metric_param(req, graph))};
  }

  if ((view == "matrix" || view == "table") && parts.size() == 5 &&
      m == "POST") {
    bool table = view == "table";
    json body = parse_body(req.body);
    AxisSide side = axis_field(body, table);
    const std::string& op = parts[4];
    Metric metric = parse_metric(optional_string(body, "metric", "count"),
                                 &metrics_);
    validate_metric(graph, metric);

    if (op == "aggregate") {
      std::string attr = optional_string(body, "attribute");
      if (table) {
        auto& t = entry->table_view();
        t = attr.empty() ? t.ungrouped() : t.aggregated(attr);
      } else {
        auto& mx = entry->matrix_view();
        mx = attr.empty() ? mx.ungrouped(side) : mx.aggregated(side, attr);
      }
    } else if (op == "expand") {
      bool expanded = optional_bool(body, "expanded", true);
      bool all = optional_bool(body, "all", false);
      std::string group = all ? std::string() : string_field(body, "group");
      if (table) {
        auto& t = entry->table_view();
        t = all ? t.all_expanded(expanded) : t.expanded(group, expanded);
      } else {
        auto& mx = entry->matrix_view();
        mx = all ? mx.all_expanded(side, expanded)
                 : mx.expanded(side, group, expanded);
      }
    } else if (op == "reorder") {
      std::string strategy = string_field(body, "strategy");
      ReorderStrategy s;
      if (strategy == "attribute") {
        s = AttributeSort{string_field(body, "attribute"),
                          optional_bool(body, "descending", false)};
      } else if (strategy == "olo") {
        Metric by = parse_metric(optional_string(body, "by", "count"), &metrics_);
        validate_metric(graph, by);
        s = OptimalLeafOrdering{by};
      } else {
        throw BadRequest("strategy must be \"attribute\" or \"olo\"");
      }
      if (table) {
        auto& t = entry->table_view();
        t = t.permuted(reorder(t, s));
      } else {
        auto& mx = entry->matrix_view();
        mx = mx.permuted(side, reorder(mx, side, s));
      }
    } else {
      throw NotFoundError("unknown view operation '" + op + "'");
    }
    return {200, view_json(table, metric)};
  }

  if (view == "highlight" && parts.size() == 4 && m == "POST") {
    json body = parse_body(req.body);
    std::string from = string_field(body, "view");
    CellRef cell{string_field(body, "row"), string_field(body, "col")};
    std::vector<CellRef> cells;
    std::string target;
    if (from == "table") {
      cells = highlight_from_table(entry->table_view(), entry->matrix_view(), cell);
      target = "matrix";
    } else if (from == "matrix") {
      cells = highlight_from_matrix(entry->matrix_view(), entry->table_view(), cell);
      target = "table";
    } else {
      throw BadRequest("view must be \"matrix\" or \"table\"");
    }
    return {200, json{{"query", entry->id},
                      {"source", {{"view", from}, {"row", cell.row}, {"col", cell.col}}},
                      {"target", target},
                      {"cells", cells_to_json(cells)}}};
  }

  if (view == "selection") {
    auto selection_json = [&] {
      return json{{"query", entry->id},
                  {"cells", entry->selection_cells},
                  {"paths", entry->selection.size()}};
    };
    if (parts.size() == 4 && m == "POST") {
      json body = parse_body(req.body);
      std::string mode = optional_string(body, "mode", "replace");
      if (mode != "replace" && mode != "add") {
        throw BadRequest("mode must be \"replace\" or \"add\"");
      }
      auto it = body.find("cells");
      if (it == body.end() || !it->is_array()) {
        throw BadRequest("field 'cells' must be an array");
      }
      Selection selection;
      json cells = json::array();
      for (const json& c : *it) {
        if (!c.is_object()) throw BadRequest("cells must be objects");
        std::string v = string_field(c, "view");
        if (v != "matrix" && v != "table") {
          throw BadRequest("view must be \"matrix\" or \"table\"");
        }
        SelectedCell sc{v == "matrix" ? SelectedCell::View::kMatrix
                                      : SelectedCell::View::kTable,
                        {string_field(c, "row"), string_field(c, "col")}};
        selection.push_back(sc);
        cells.push_back({{"view", v}, {"row", sc.cell.row}, {"col", sc.cell.col}});
      }
      PathIds ids =
          resolve_selection(entry->matrix_view(), entry->table_view(), selection);
      if (mode == "add") {
        PathIds merged;
        std::set_union(entry->selection.begin(), entry->selection.end(),
                       ids.begin(), ids.end(), std::back_inserter(merged));
        ids = std::move(merged);
        for (json& c : cells) entry->selection_cells.push_back(std::move(c));
      } else {
        entry->selection_cells = std::move(cells);
      }
      entry->selection = std::move(ids);
      return {200, selection_json()};
    }
    if (parts.size() == 4 && m == "GET") return {200, selection_json()};
    if (parts.size() == 5 && parts[4] == "paths" && m == "GET") {
      auto it = req.params.find("groupBy");
      std::string attr = it == req.params.end() ? entry->dataset->motif_attribute
                                                : it->second;
      json out = motifs_to_json(*result,
                                group_by_motif(*result, entry->selection, attr),
                                attr);
      out["query"] = entry->id;
      return {200, out};
    }
    if (parts.size() == 5 && parts[4] == "subgraph" && m == "GET") {
      auto it = req.params.find("layout");
      std::string layout = it == req.params.end() ? "force" : it->second;
      LayoutKind kind;
      if (layout == "force") {
        kind = LayoutKind::kForce;
      } else if (layout == "spatial") {
        kind = LayoutKind::kSpatial;
      } else {
        throw BadRequest("layout must be \"force\" or \"spatial\"");
      }
      json out = subgraph_to_json(
          *result, extract_subgraph(*result, entry->selection, kind,
                                    entry->dataset->geo_attribute));
      out["query"] = entry->id;
      return {200, out};
    }
  }
  throw NotFoundError("unknown route " + m + " '" + req.path + "'");
}

}  // namespace connview
