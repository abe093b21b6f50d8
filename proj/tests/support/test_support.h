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

#ifndef CONNVIEW_TESTS_SUPPORT_TEST_SUPPORT_H_
#define CONNVIEW_TESTS_SUPPORT_TEST_SUPPORT_H_

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "connview/enumerate.h"
#include "connview/graph.h"
#include "connview/query.h"

namespace connview::testing {

struct RandomGraphSpec {
  std::size_t nodes = 8;
  double edge_probability = 0.2;
  /// Chance that an emitted edge gets a parallel twin.
  double parallel_probability = 0.0;
  bool self_loops = false;
  /// Chance that a node lacks each categorical attribute.
  double missing_probability = 0.1;
};

/// Nodes "n00".."nNN" with categorical "color" (red/green/blue) and "kind"
/// (x/y), quantitative "size"; edges "eNNNN" with categorical "carrier"
/// (AA/UA/DL) and quantitative "delay" in [0,60).
Graph random_graph(std::uint64_t seed, const RandomGraphSpec& spec);

/// Edge id sequence of a path.
using IdPath = std::vector<std::string>;

/// Exhaustive DFS over the raw edge list. Selectors, constraints, degrees
/// and ordering are evaluated independently of the library.
std::vector<IdPath> oracle_paths(const Graph& graph, const PathQuery& query);

std::vector<IdPath> to_id_paths(const QueryResult& result);

/// Node id sequence of an edge id path, read from the raw edge list.
std::vector<std::string> oracle_nodes(const Graph& graph, const IdPath& path);

/// (start id, end id) -> path count.
std::map<std::pair<std::string, std::string>, std::size_t> oracle_matrix(
    const Graph& graph, const std::vector<IdPath>& paths);

/// (node id, "(j,l)") -> path count over interior positions.
std::map<std::pair<std::string, std::string>, std::size_t> oracle_table(
    const Graph& graph, const std::vector<IdPath>& paths);

/// A^l over nodes in id order, by repeated naive multiplication.
std::vector<std::vector<std::uint64_t>> adjacency_power(const Graph& graph,
                                                        std::size_t l);

/// Every edge exists, consecutive edges chain, length >= 1.
bool valid_id_path(const Graph& graph, const IdPath& path);

std::shared_ptr<const Graph> shared_g0();

/// Node ids matching a selector, evaluated without the library.
std::vector<std::string> oracle_select(const Graph& graph,
                                       const NodeSelector& selector);

}  // namespace connview::testing

#endif  // CONNVIEW_TESTS_SUPPORT_TEST_SUPPORT_H_
