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

#ifndef CONNVIEW_SERVICE_H_
#define CONNVIEW_SERVICE_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "connview/metric.h"
#include "connview/query.h"
#include "json.hpp"

namespace connview {

/// Server configuration, read from a JSON file:
///
///   {"listen": "127.0.0.1", "port": 8080, "resultCap": 1000000,
///    "datasetDir": "data", "threads": 0,
///    "datasets": [{"id": "g0", "format": "json", "path": "g0/g0.json",
///                  "motifAttribute": "region", "geoAttribute": "loc"}]}
///
/// Every key is optional. A relative datasetDir is resolved against the
/// directory of the config file. Entries of "datasets" take the same form
/// as the body of POST /api/datasets and are loaded at startup.
struct ServiceConfig {
  std::string listen = "127.0.0.1";
  int port = 8080;
  std::size_t result_cap = kDefaultResultCap;
  std::filesystem::path dataset_dir = ".";
  unsigned threads = 0;
  std::vector<nlohmann::json> datasets;
};

ServiceConfig parse_service_config(const nlohmann::json& doc,
                                   const std::filesystem::path& base_dir = ".");
ServiceConfig load_service_config(const std::filesystem::path& file);

struct ApiRequest {
  std::string method;  // GET, POST, DELETE
  std::string path;    // /api/...
  std::map<std::string, std::string> params;
  std::string body;
};

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
  std::string text() const { return body.dump(); }
};

/// The HTTP API without the transport.
///
/// Routes (all bodies JSON):
///   POST   /api/datasets                        load a dataset
///   GET    /api/datasets/{id}
///   POST   /api/sessions                        new session id
///   POST   /api/queries                         {dataset, dsl, session?,
///                                                async?, resultCap?}
///   GET    /api/queries/{id}[?wait=1]           status and summary
///   DELETE /api/queries/{id}                    cancel and forget
///   GET    /api/queries/{id}/matrix?metric=
///   GET    /api/queries/{id}/table?metric=
///   POST   /api/queries/{id}/{matrix|table}/{aggregate|expand|reorder}
///   POST   /api/queries/{id}/highlight          {view, row, col}
///   POST   /api/queries/{id}/selection          {cells:[{view,row,col}], mode?}
///   GET    /api/queries/{id}/selection
///   GET    /api/queries/{id}/selection/paths?groupBy=
///   GET    /api/queries/{id}/selection/subgraph?layout=force|spatial
///
/// Errors: 400 malformed body or DSL (with line/column), 404 unknown
/// dataset/session/query/cell, 409 result cap exceeded or cancelled query,
/// 422 semantic errors. Query ids are q1, q2, ... in creation order and a
/// repeated (dataset, normalized DSL) within a session returns the cached
/// query, so a replayed request sequence yields identical bodies.
class Service {
 public:
  explicit Service(ServiceConfig config = {});
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  ApiResponse handle(const ApiRequest& request);

  /// Adds a custom metric usable as metric=custom:NAME.
  void register_metric(std::string name, CustomMetricFn fn);

  const ServiceConfig& config() const { return config_; }

 private:
  struct Dataset;
  struct Session;
  struct QueryEntry;

  ApiResponse route(const ApiRequest& request);
  ApiResponse post_dataset(const nlohmann::json& body);
  ApiResponse get_dataset(const std::string& id);
  ApiResponse post_session();
  ApiResponse post_query(const nlohmann::json& body);
  ApiResponse get_query(const std::string& id, bool wait);
  ApiResponse delete_query(const std::string& id);
  ApiResponse query_route(const ApiRequest& request,
                          const std::vector<std::string>& parts);

  std::shared_ptr<Dataset> find_dataset(const std::string& id);
  std::shared_ptr<QueryEntry> find_query(const std::string& id);
  std::shared_ptr<Session> find_session(const std::string& id);
  Metric metric_param(const ApiRequest& request, const Graph& graph) const;

  ServiceConfig config_;
  MetricRegistry metrics_;
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<Dataset>> datasets_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::map<std::string, std::shared_ptr<QueryEntry>> queries_;
  std::size_t next_dataset_ = 1;
  std::size_t next_session_ = 1;
  std::size_t next_query_ = 1;
};

/// httplib binding of a Service.
class HttpServer {
 public:
  explicit HttpServer(Service& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds and serves on a background thread. Port 0 picks a free port.
  /// Returns the bound port; throws Error when binding fails.
  int start(const std::string& host, int port);
  /// Binds and serves on the calling thread until stop().
  void run(const std::string& host, int port);
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace connview

#endif  // CONNVIEW_SERVICE_H_
