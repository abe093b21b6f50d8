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

#include <gtest/gtest.h>

#include "connview/error.h"
#include "connview/ingestion.h"
#include "connview/metric.h"
#include "test_support.h"

namespace connview {
namespace {

QueryResult g0_result() {
  return enumerate_paths(
      testing::shared_g0(),
      parse_query(R"(PATHS LENGTH <= 2 FROM region = "west" TO region = "east")"));
}

PathIds all_ids(const QueryResult& r) {
  PathIds ids(r.paths.size());
  for (std::uint32_t i = 0; i < ids.size(); ++i) ids[i] = i;
  return ids;
}

}  // namespace

TEST(MetricTest, BuiltinsOnG0) {
  QueryResult r = g0_result();
  PathIds bf = {2, 3};  // B>F and B>D>F
  EXPECT_EQ(evaluate_metric(Metric::count(), r, bf), MetricResult::scalar(2));
  EXPECT_EQ(evaluate_metric(Metric::min_length(), r, bf),
            MetricResult::scalar(1));
  EXPECT_EQ(evaluate_metric(Metric::per_length_count(), r, bf),
            MetricResult::vector({1, 1}));
  EXPECT_EQ(evaluate_metric(Metric::count(), r, all_ids(r)),
            MetricResult::scalar(6));
}

TEST(MetricTest, EmptySetIsUndefined) {
  QueryResult r = g0_result();
  for (const Metric& m : {Metric::count(), Metric::min_length(),
                          Metric::per_length_count()}) {
    EXPECT_FALSE(evaluate_metric(m, r, {}).defined()) << m.describe();
  }
  EXPECT_EQ(MetricResult::undefined().scalar_or(-1), -1);
}

TEST(MetricTest, AttrFraction) {
  auto g = std::make_shared<const Graph>(parse_json_graph(R"({
    "nodes": [{"id":"A"},{"id":"B"},{"id":"C"}],
    "edges": [{"id":"e1","source":"A","target":"B","attrs":{"delay":20}},
              {"id":"e2","source":"B","target":"C","attrs":{"delay":5}},
              {"id":"e3","source":"A","target":"C","attrs":{"delay":3}},
              {"id":"e4","source":"A","target":"C"}]})"));
  QueryResult r = enumerate_paths(
      g, parse_query(R"(PATHS LENGTH <= 2 FROM NODES("A") TO NODES("C"))"));
  ASSERT_EQ(r.paths.size(), 3u);
  Metric late = parse_metric("fraction(edge.delay > 15)");
  validate_metric(*g, late);
  EXPECT_EQ(evaluate_metric(late, r, all_ids(r)), MetricResult::scalar(1.0 / 3));
  EXPECT_EQ(late.describe(), "fraction(edge.delay > 15)");
}

TEST(MetricTest, ParseAndValidate) {
  EXPECT_EQ(parse_metric("count").kind, Metric::Kind::kCount);
  EXPECT_EQ(parse_metric("min_length").kind, Metric::Kind::kMinLength);
  EXPECT_EQ(parse_metric("per_length").kind, Metric::Kind::kPerLengthCount);
  EXPECT_THROW(parse_metric("average"), ParseError);
  EXPECT_THROW(parse_metric("fraction(edge.delay >)"), ParseError);
  EXPECT_THROW(parse_metric("custom:nope"), NotFoundError);

  Graph g = testing::random_graph(1, {});
  EXPECT_THROW(validate_metric(g, parse_metric("fraction(edge.altitude > 1)")),
               SemanticError);
  EXPECT_THROW(validate_metric(g, parse_metric("fraction(node.size > 1)")),
               SemanticError);
  EXPECT_THROW(validate_metric(g, parse_metric("fraction(edge.carrier > 1)")),
               SemanticError);
}

TEST(MetricTest, CustomMetricRegistry) {
  MetricRegistry registry;
  registry.add("total_length", [](const QueryResult& r,
                                  std::span<const std::uint32_t> ids) {
    double sum = 0;
    for (auto id : ids) sum += static_cast<double>(r.paths[id].length());
    return MetricResult::scalar(sum);
  });
  Metric m = parse_metric("custom:total_length", &registry);
  EXPECT_EQ(m.describe(), "custom:total_length");
  QueryResult r = g0_result();
  EXPECT_EQ(evaluate_metric(m, r, all_ids(r)), MetricResult::scalar(11));
  EXPECT_FALSE(evaluate_metric(m, r, {}).defined());
}

TEST(MetricTest, PerLengthSumsToCount) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto g = std::make_shared<const Graph>(
        testing::random_graph(seed, {.nodes = 10, .edge_probability = 0.3}));
    QueryResult r = enumerate_paths(
        g, parse_query("PATHS LENGTH <= 4 FROM kind = \"x\" TO kind = \"y\""));
    if (r.paths.empty()) continue;
    MetricResult v = evaluate_metric(Metric::per_length_count(), r, all_ids(r));
    ASSERT_EQ(v.values.size(), 4u);
    EXPECT_EQ(v.scalar_or(0), static_cast<double>(r.paths.size()));
  }
}

}  // namespace connview
