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
#include <thread>

#include <gtest/gtest.h>

#include "connview/enumerate.h"
#include "connview/error.h"
#include "connview/ingestion.h"
#include "test_support.h"

namespace connview {
namespace {

using testing::IdPath;

constexpr const char* kWestEast =
    R"(PATHS LENGTH <= 2 FROM region = "west" TO region = "east")";

std::vector<IdPath> run(const std::shared_ptr<const Graph>& g,
                        std::string_view dsl, unsigned threads = 1) {
  return testing::to_id_paths(
      enumerate_paths(g, parse_query(dsl), {.threads = threads}));
}

}  // namespace

TEST(EnumerateTest, G0WestToEast) {
  auto g = testing::shared_g0();
  QueryResult r = enumerate_paths(g, parse_query(kWestEast));
  std::vector<IdPath> expected = {{"e1", "e5"}, {"e1", "e6"}, {"e3"},
                                  {"e2", "e5"}, {"e2", "e6"}, {"e4", "e7"}};
  EXPECT_EQ(testing::to_id_paths(r), expected);
  EXPECT_EQ(testing::oracle_paths(*g, parse_query(kWestEast)), expected);
  EXPECT_EQ(r.start_nodes.size(), 3u);
  EXPECT_EQ(r.end_nodes.size(), 2u);
  EXPECT_EQ(r.max_length(), 2u);
  EXPECT_EQ(r.length_histogram(),
            (std::map<std::size_t, std::size_t>{{1, 1}, {2, 5}}));
  EXPECT_FALSE(r.truncated);
}

TEST(EnumerateTest, G0DegreeConstraint) {
  auto g = testing::shared_g0();
  EXPECT_EQ(run(g, std::string(kWestEast) + " WHERE intermediate.degree < 4"),
            (std::vector<IdPath>{{"e3"}, {"e4", "e7"}}));
}

TEST(EnumerateTest, ExactLengthAndNodeSelectors) {
  auto g = testing::shared_g0();
  EXPECT_EQ(run(g, R"(PATHS LENGTH = 1 FROM NODES("B") TO NODES("F", "D"))"),
            (std::vector<IdPath>{{"e2"}, {"e3"}}));
  EXPECT_EQ(run(g, R"(PATHS LENGTH = 2 FROM NODES("B") TO NODES("F"))"),
            (std::vector<IdPath>{{"e2", "e5"}}));
  EXPECT_TRUE(run(g, R"(PATHS LENGTH <= 3 FROM NODES("F") TO NODES("A"))")
                  .empty());
  EXPECT_THROW(run(g, R"(PATHS LENGTH <= 3 FROM NODES("Z") TO NODES("A"))"),
               SemanticError);
  EXPECT_TRUE(run(g, R"(PATHS LENGTH <= 2 FROM region = "north" TO region = "east")")
                  .empty());
}

TEST(EnumerateTest, SimpleModeExcludesCyclesWalkModeKeepsThem) {
  auto g = std::make_shared<const Graph>(Graph::build(
      {{"A", {}}, {"B", {}}},
      {{"e1", "A", "B", {}}, {"e2", "B", "A", {}}, {"e3", "A", "A", {}}}, {}));
  EXPECT_TRUE(run(g, R"(PATHS LENGTH <= 3 FROM NODES("A") TO NODES("A"))")
                  .empty());
  EXPECT_EQ(
      run(g, R"(PATHS LENGTH <= 2 FROM NODES("A") TO NODES("A") MODE WALK)"),
      (std::vector<IdPath>{{"e3"}, {"e1", "e2"}, {"e3", "e3"}}));
}

TEST(EnumerateTest, ParallelEdgesAreDistinctPaths) {
  auto g = std::make_shared<const Graph>(Graph::build(
      {{"A", {}}, {"B", {}}, {"C", {}}},
      {{"e1", "A", "B", {}}, {"e2", "A", "B", {}}, {"e3", "B", "C", {}}}, {}));
  EXPECT_EQ(run(g, R"(PATHS LENGTH <= 2 FROM NODES("A") TO NODES("C"))"),
            (std::vector<IdPath>{{"e1", "e3"}, {"e2", "e3"}}));
}

TEST(EnumerateTest, MatchesOracleWithConstraints) {
  const char* queries[] = {
      "PATHS LENGTH <= 3 FROM color = \"red\" TO color IN (\"blue\", \"green\")",
      "PATHS LENGTH <= 4 FROM kind = \"x\" TO kind = \"y\" WHERE edge.delay < 40",
      "PATHS LENGTH = 3 FROM color = \"red\" TO kind = \"x\" "
      "WHERE intermediate.color != \"green\"",
      "PATHS LENGTH <= 3 FROM color = \"blue\" TO color = \"blue\" "
      "WHERE node.size >= 2 AND edge.carrier IN (\"AA\", \"UA\")",
      "PATHS LENGTH <= 3 FROM kind = \"x\" TO kind = \"x\" MODE WALK "
      "WHERE intermediate.degree <= 4",
  };
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto g = std::make_shared<const Graph>(testing::random_graph(
        seed, {.nodes = 9, .edge_probability = 0.25, .parallel_probability = 0.1,
               .self_loops = seed % 2 == 0}));
    for (const char* dsl : queries) {
      PathQuery q = parse_query(dsl);
      EXPECT_EQ(testing::to_id_paths(enumerate_paths(g, q)),
                testing::oracle_paths(*g, q))
          << "seed " << seed << ": " << dsl;
    }
  }
}

TEST(EnumerateTest, ThreadCountDoesNotChangeOutput) {
  auto g = std::make_shared<const Graph>(
      testing::random_graph(3, {.nodes = 12, .edge_probability = 0.3}));
  const char* dsl = "PATHS LENGTH <= 4 FROM kind = \"x\" TO kind = \"y\"";
  auto one = run(g, dsl, 1);
  EXPECT_EQ(run(g, dsl, 3), one);
  EXPECT_EQ(run(g, dsl, 8), one);
}

TEST(EnumerateTest, WalkCountsEqualAdjacencyPowers) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto g = std::make_shared<const Graph>(testing::random_graph(
        seed, {.nodes = 8, .edge_probability = 0.3, .parallel_probability = 0.2,
               .self_loops = true}));
    for (std::size_t l = 1; l <= 3; ++l) {
      PathQuery q;
      q.start = NodeSelector::in("size", {0.0, 1.0, 2.0, 3.0, 4.0});
      q.end = NodeSelector::in("size", {5.0, 6.0, 7.0, 8.0, 9.0});
      q.max_len = l;
      q.len_mode = LengthMode::kExactly;
      q.path_mode = PathMode::kWalk;
      QueryResult r = enumerate_paths(g, q);
      auto power = testing::adjacency_power(*g, l);
      std::uint64_t expected = 0;
      for (NodeIndex s : r.start_nodes) {
        for (NodeIndex e : r.end_nodes) expected += power[s][e];
      }
      EXPECT_EQ(r.paths.size(), expected) << "seed " << seed << " l " << l;
    }
  }
}

TEST(EnumerateTest, ResultCapFailsWholeQuery) {
  auto g = testing::shared_g0();
  PathQuery q = parse_query(kWestEast);
  q.result_cap = 6;
  EXPECT_EQ(enumerate_paths(g, q).paths.size(), 6u);
  q.result_cap = 5;
  try {
    enumerate_paths(g, q);
    FAIL() << "expected ResultCapExceeded";
  } catch (const ResultCapExceeded& e) {
    EXPECT_EQ(e.cap(), 5u);
    EXPECT_GT(e.reached(), 5u);
  }
}

TEST(EnumerateTest, CancellationStopsLongQuery) {
  // Dense graph whose walk count explodes.
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  for (int i = 0; i < 40; ++i) nodes.push_back({"v" + std::to_string(i), {}});
  for (int i = 0; i < 40; ++i) {
    for (int j = 0; j < 40; ++j) {
      edges.push_back({"e" + std::to_string(i * 40 + j),
                       "v" + std::to_string(i), "v" + std::to_string(j), {}});
    }
  }
  auto g = std::make_shared<const Graph>(
      Graph::build(std::move(nodes), std::move(edges), {}));
  PathQuery q = parse_query(
      "PATHS LENGTH <= 8 FROM NODES(\"v0\") TO NODES(\"v1\") MODE WALK");
  q.result_cap = std::size_t{1} << 62;

  std::stop_source stop;
  auto start = std::chrono::steady_clock::now();
  std::jthread canceller([&] {
    std::this_thread::sleep_for(std::chrono::milliseconds(100));
    stop.request_stop();
  });
  EXPECT_THROW(enumerate_paths(g, q, {.threads = 1, .stop = stop.get_token()}),
               Cancelled);
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(5));
}

TEST(EnumerateTest, PathsAreValidAndOrdered) {
  auto g = std::make_shared<const Graph>(
      testing::random_graph(11, {.nodes = 12, .edge_probability = 0.3}));
  QueryResult r = enumerate_paths(
      g, parse_query("PATHS LENGTH <= 4 FROM kind = \"x\" TO kind = \"y\""));
  ASSERT_FALSE(r.paths.empty());
  for (std::size_t i = 0; i < r.paths.size(); ++i) {
    EXPECT_TRUE(is_chained(*g, r.paths[i]));
    if (i > 0) EXPECT_LT(r.paths[i - 1], r.paths[i]);
  }
  for (const IdPath& p : testing::to_id_paths(r)) {
    EXPECT_TRUE(testing::valid_id_path(*g, p));
  }
}

}  // namespace connview
