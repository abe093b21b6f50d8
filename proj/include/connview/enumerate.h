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

#ifndef CONNVIEW_ENUMERATE_H_
#define CONNVIEW_ENUMERATE_H_

#include <map>
#include <memory>
#include <stop_token>
#include <vector>

#include "connview/graph.h"
#include "connview/query.h"

namespace connview {

/// Outcome of a path query: resolved endpoint sets and every matching path,
/// sorted by (start id, end id, length, edge id sequence).
struct QueryResult {
  std::shared_ptr<const Graph> graph;
  PathQuery query;
  std::vector<NodeIndex> start_nodes;  // sorted, unique
  std::vector<NodeIndex> end_nodes;    // sorted, unique
  std::vector<Path> paths;
  /// Always false: exceeding the cap fails the query instead.
  bool truncated = false;

  /// Longest path length present, 0 when there are no paths.
  std::size_t max_length() const;
  /// Number of paths per length.
  std::map<std::size_t, std::size_t> length_histogram() const;
};

struct EnumerateOptions {
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Checked at every BFS level and periodically within a level.
  std::stop_token stop;
};

/// Nodes matching a selector, sorted by index. An empty match is not an
/// error; unknown ids in an id list raise SemanticError.
std::vector<NodeIndex> resolve_selector(const Graph& graph,
                                        const NodeSelector& selector);

/// Enumerates every path from a start node to an end node that satisfies the
/// length bound, path mode and constraints.
///
/// Expansion is breadth-first from all start nodes at once, one level per
/// path length. Partial paths are pruned when their last node cannot reach
/// an end node within the remaining length using admissible edges and
/// intermediates. Start nodes are split across worker threads; the final
/// sort makes the output independent of scheduling.
///
/// Throws SemanticError for an invalid query, ResultCapExceeded when more
/// than query.result_cap paths match, Cancelled when `options.stop` fires.
QueryResult enumerate_paths(std::shared_ptr<const Graph> graph,
                            const PathQuery& query,
                            const EnumerateOptions& options = {});

}  // namespace connview

#endif  // CONNVIEW_ENUMERATE_H_
