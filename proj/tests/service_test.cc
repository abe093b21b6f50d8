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

#include <chrono>

#include <gtest/gtest.h>

#include "connview/error.h"
#include "connview/service.h"
#include "httplib.h"

namespace connview {
namespace {

using nlohmann::json;

constexpr const char* kWestEast =
    R"(PATHS LENGTH <= 2 FROM region = "west" TO region = "east")";

class ServiceTest : public ::testing::Test {
 protected:
  ServiceTest() : service_(make_config()) {}

  static ServiceConfig make_config() {
    ServiceConfig c;
    c.dataset_dir = CONNVIEW_DATA_DIR;
    c.datasets.push_back({{"id", "g0"},
                          {"format", "json"},
                          {"path", "g0/g0.json"},
                          {"motifAttribute", "id"}});
    return c;
  }

  ApiResponse call(const std::string& method, const std::string& path,
                   const json& body = nullptr,
                   std::map<std::string, std::string> params = {}) {
    return service_.handle(
        {method, path, std::move(params), body.is_null() ? "" : body.dump()});
  }

  std::string run_g0() {
    ApiResponse r =
        call("POST", "/api/queries", {{"dataset", "g0"}, {"dsl", kWestEast}});
    EXPECT_EQ(r.status, 200) << r.text();
    return r.body["id"];
  }

  Service service_;
};

}  // namespace

TEST_F(ServiceTest, DatasetsLoadAndDescribe) {
  ApiResponse r = call("GET", "/api/datasets/g0");
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.body["nodes"], 7);
  EXPECT_EQ(r.body["schema"]["nodes"]["region"], "categorical");

  r = call("POST", "/api/datasets",
           {{"format", "csv"}, {"nodes", "g0/nodes.csv"}, {"edges", "g0/edges.csv"}});
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.body["id"], "d1");
  EXPECT_EQ(call("POST", "/api/datasets", {{"id", "g0"}, {"path", "g0/g0.json"}})
                .status,
            409);
  EXPECT_EQ(call("POST", "/api/datasets", {{"path", "../secret.json"}}).status,
            400);
  EXPECT_EQ(call("POST", "/api/datasets",
                 {{"format", "inline"},
                  {"graph", {{"nodes", {{{"id", "A"}}}},
                             {"edges", {{{"id", "e"}, {"source", "A"}, {"target", "Z"}}}}}}})
                .status,
            422);
  EXPECT_EQ(call("GET", "/api/datasets/nope").status, 404);
}

TEST_F(ServiceTest, QuerySummaryAndMatrix) {
  ApiResponse r =
      call("POST", "/api/queries", {{"dataset", "g0"}, {"dsl", kWestEast}});
  ASSERT_EQ(r.status, 200) << r.text();
  EXPECT_EQ(r.body["id"], "q1");
  EXPECT_EQ(r.body["status"], "done");
  EXPECT_EQ(r.body["summary"]["paths"], 6);
  EXPECT_EQ(r.body["summary"]["lengths"], (json{{"1", 1}, {"2", 5}}));

  r = call("GET", "/api/queries/q1/matrix", nullptr, {{"metric", "count"}});
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.body["rows"].size(), 3u);
  EXPECT_EQ(r.body["cols"].size(), 2u);
  EXPECT_EQ(r.body["cells"][2]["count"], 2);

  r = call("GET", "/api/queries/q1/table", nullptr, {{"metric", "per_length"}});
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.body["cells"][0]["metric"]["values"], (json{0.0, 4.0}));
}

TEST_F(ServiceTest, CachedByNormalizedDsl) {
  std::string id = run_g0();
  ApiResponse again = call(
      "POST", "/api/queries",
      {{"dataset", "g0"},
       {"dsl", "PATHS   LENGTH <= 2\nFROM region = 'west' TO region = 'east' MODE SIMPLE"}});
  EXPECT_EQ(again.body["id"], id);

  ApiResponse session = call("POST", "/api/sessions");
  EXPECT_EQ(session.body["id"], "s1");
  ApiResponse other = call("POST", "/api/queries",
                           {{"dataset", "g0"}, {"dsl", kWestEast}, {"session", "s1"}});
  EXPECT_EQ(other.body["id"], "q2");
  EXPECT_EQ(call("POST", "/api/queries",
                 {{"dataset", "g0"}, {"dsl", kWestEast}, {"session", "s9"}})
                .status,
            404);
}

TEST_F(ServiceTest, ErrorStatuses) {
  ApiResponse r = call("POST", "/api/queries",
                       {{"dataset", "g0"}, {"dsl", "PATHS LENGTH <= 2 FRM x = 1"}});
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(r.body["error"]["type"], "parse");
  EXPECT_EQ(r.body["error"]["line"], 1);
  EXPECT_EQ(r.body["error"]["column"], 19);

  EXPECT_EQ(service_.handle({"POST", "/api/queries", {}, "{oops"}).status, 400);
  EXPECT_EQ(call("POST", "/api/queries", {{"dataset", "g0"}}).status, 400);
  EXPECT_EQ(call("POST", "/api/queries",
                 {{"dataset", "g0"},
                  {"dsl", "PATHS LENGTH <= 2 FROM altitude = 1 TO region = \"east\""}})
                .status,
            422);
  EXPECT_EQ(call("POST", "/api/queries", {{"dataset", "zz"}, {"dsl", kWestEast}})
                .status,
            404);

  r = call("POST", "/api/queries",
           {{"dataset", "g0"}, {"dsl", kWestEast}, {"resultCap", 5}});
  EXPECT_EQ(r.status, 409);
  EXPECT_EQ(r.body["error"]["type"], "result_cap");
  std::string failed = r.body["error"]["query"];
  EXPECT_EQ(call("GET", "/api/queries/" + failed + "/matrix").status, 409);
  EXPECT_EQ(call("GET", "/api/queries/" + failed).body["status"], "failed");

  std::string id = run_g0();
  std::string base = "/api/queries/" + id;
  EXPECT_EQ(call("POST", base + "/matrix/aggregate",
                 {{"axis", "rows"}, {"attribute", "altitude"}})
                .status,
            422);
  EXPECT_EQ(call("GET", base + "/matrix", nullptr, {{"metric", "bogus"}}).status,
            400);
  EXPECT_EQ(call("POST", base + "/highlight",
                 {{"view", "table"}, {"row", "Q"}, {"col", "(1,2)"}})
                .status,
            404);
  EXPECT_EQ(call("GET", "/api/queries/q99").status, 404);
  EXPECT_EQ(call("GET", "/api/nothing").status, 404);
}

TEST_F(ServiceTest, AggregateExpandReorder) {
  std::string base = "/api/queries/" + run_g0();
  ApiResponse r = call("POST", base + "/matrix/aggregate",
                       {{"axis", "rows"}, {"attribute", "region"}});
  ASSERT_EQ(r.status, 200) << r.text();
  EXPECT_EQ(r.body["rows"][0]["id"], "[region=west]");
  EXPECT_EQ(r.body["cells"][0]["count"], 3);
  EXPECT_EQ(r.body["cells"][1]["count"], 3);

  r = call("POST", base + "/matrix/expand",
           {{"axis", "rows"}, {"group", "[region=west]"}});
  EXPECT_EQ(r.body["rows"].size(), 4u);
  EXPECT_EQ(call("GET", base + "/matrix").body, r.body);

  r = call("POST", base + "/matrix/aggregate", {{"axis", "rows"}, {"attribute", nullptr}});
  EXPECT_EQ(r.body["rows"].size(), 3u);

  r = call("POST", base + "/matrix/reorder",
           {{"axis", "rows"}, {"strategy", "attribute"}, {"attribute", "region"},
            {"descending", true}});
  EXPECT_EQ(r.status, 200) << r.text();
  r = call("POST", base + "/matrix/reorder", {{"axis", "cols"}, {"strategy", "olo"}});
  EXPECT_EQ(r.status, 200) << r.text();
  EXPECT_EQ(call("POST", base + "/table/reorder", {{"strategy", "olo"}}).status, 200);
  EXPECT_EQ(call("POST", base + "/table/aggregate",
                 {{"axis", "cols"}, {"attribute", "region"}})
                .status,
            400);

  // View changes never alter the query result.
  EXPECT_EQ(call("GET", base).body["summary"]["paths"], 6);
}

TEST_F(ServiceTest, HighlightSelectionPathsSubgraph) {
  std::string base = "/api/queries/" + run_g0();
  ApiResponse r = call("POST", base + "/highlight",
                       {{"view", "table"}, {"row", "D"}, {"col", "(1,2)"}});
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.body["cells"].size(), 4u);
  EXPECT_EQ(r.body["target"], "matrix");

  r = call("POST", base + "/selection",
           {{"cells", {{{"view", "matrix"}, {"row", "B"}, {"col", "F"}}}}});
  ASSERT_EQ(r.status, 200) << r.text();
  EXPECT_EQ(r.body["paths"], 2);

  r = call("GET", base + "/selection/paths");
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.body["motifs"].size(), 2u);
  r = call("GET", base + "/selection/paths", nullptr, {{"groupBy", "region"}});
  EXPECT_EQ(r.body["motifs"].size(), 2u);

  r = call("GET", base + "/selection/subgraph", nullptr, {{"layout", "force"}});
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.body["nodes"].size(), 3u);
  EXPECT_EQ(call("GET", base + "/selection/subgraph", nullptr,
                 {{"layout", "spatial"}})
                .status,
            422);

  r = call("POST", base + "/selection",
           {{"mode", "add"},
            {"cells", {{{"view", "table"}, {"row", "E"}, {"col", "(1,2)"}}}}});
  EXPECT_EQ(r.body["paths"], 3);
  EXPECT_EQ(call("GET", base + "/selection").body["cells"].size(), 2u);
}

TEST_F(ServiceTest, AsyncQueryCanBeCancelled) {
  json graph;
  graph["nodes"] = json::array();
  graph["edges"] = json::array();
  for (int i = 0; i < 40; ++i) graph["nodes"].push_back({{"id", "v" + std::to_string(i)}});
  for (int i = 0; i < 40; ++i) {
    for (int j = 0; j < 40; ++j) {
      graph["edges"].push_back({{"id", "e" + std::to_string(i * 40 + j)},
                                {"source", "v" + std::to_string(i)},
                                {"target", "v" + std::to_string(j)}});
    }
  }
  ASSERT_EQ(call("POST", "/api/datasets",
                 {{"id", "dense"}, {"format", "inline"}, {"graph", graph}})
                .status,
            200);
  ApiResponse r = call(
      "POST", "/api/queries",
      {{"dataset", "dense"},
       {"dsl", "PATHS LENGTH <= 9 FROM NODES(\"v0\") TO NODES(\"v1\") MODE WALK"},
       {"resultCap", std::size_t{1} << 60},
       {"async", true}});
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.body["status"], "running");
  std::string id = r.body["id"];
  auto start = std::chrono::steady_clock::now();
  r = call("DELETE", "/api/queries/" + id);
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.body["status"], "cancelled");
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(5));
  EXPECT_EQ(call("GET", "/api/queries/" + id).status, 404);
}

TEST_F(ServiceTest, HttpBinding) {
  HttpServer server(service_);
  int port = server.start("127.0.0.1", 0);
  ASSERT_GT(port, 0);
  httplib::Client client("127.0.0.1", port);
  auto res = client.Post("/api/queries",
                         json{{"dataset", "g0"}, {"dsl", kWestEast}}.dump(),
                         "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(json::parse(res->body)["summary"]["paths"], 6);
  res = client.Get("/api/queries/q1/matrix?metric=count");
  ASSERT_TRUE(res);
  EXPECT_EQ(json::parse(res->body)["cells"].size(), 6u);
  res = client.Delete("/api/queries/q1");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  server.stop();
}

TEST(ServiceConfigTest, ParsesKeys) {
  ServiceConfig c = parse_service_config(
      json{{"listen", "0.0.0.0"}, {"port", 9000}, {"resultCap", 50},
           {"datasetDir", "sets"}, {"datasets", json::array()}},
      "/etc/connview");
  EXPECT_EQ(c.listen, "0.0.0.0");
  EXPECT_EQ(c.port, 9000);
  EXPECT_EQ(c.result_cap, 50u);
  EXPECT_EQ(c.dataset_dir, std::filesystem::path("/etc/connview/sets"));
  EXPECT_THROW(parse_service_config(json{{"resultCap", 0}}), DataError);
}

}  // namespace connview
