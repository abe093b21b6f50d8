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

#ifndef CONNVIEW_DETAILS_H_
#define CONNVIEW_DETAILS_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "connview/highlight.h"
#include "connview/overview.h"

namespace connview {

struct SelectedCell {
  enum class View { kMatrix, kTable };

  View view = View::kMatrix;
  CellRef cell;

  bool operator==(const SelectedCell&) const = default;
};

using Selection = std::vector<SelectedCell>;

/// Union of the selected cells' path sets, sorted like the query result.
/// Throws NotFoundError for cells that are not in the current views.
PathIds resolve_selection(const ConnectivityMatrix& matrix,
                          const IntermediateTable& table,
                          const Selection& selection);

/// Paths sharing one sequence of node display keys.
struct Motif {
  std::vector<std::string> key;
  PathIds members;
};

/// Groups paths by the display value of each node along the path ("id"
/// means the node id; nodes lacking the attribute fall back to their id).
/// Motifs are sorted by descending size, then by key. Throws SemanticError
/// if `display_attr` is not a categorical node attribute.
std::vector<Motif> group_by_motif(const QueryResult& result,
                                  std::span<const std::uint32_t> path_ids,
                                  std::string_view display_attr);

enum class LayoutKind { kForce, kSpatial };

struct PlacedNode {
  NodeIndex node;
  double x;
  double y;
};

/// Nodes and edges of the selected paths with 2D positions. Spatial layouts
/// use x = longitude, y = latitude.
struct SubgraphView {
  LayoutKind layout = LayoutKind::kForce;
  std::vector<PlacedNode> nodes;  // sorted by node index
  std::vector<EdgeIndex> edges;   // sorted by edge index
};

struct ForceLayoutOptions {
  unsigned seed = 42;
  unsigned iterations = 300;
};

/// Force layout is Fruchterman-Reingold in the unit square with a fixed seed
/// and iteration count, so identical input gives identical positions.
/// Spatial layout copies `geo_attr`; SemanticError lists the nodes lacking it.
SubgraphView extract_subgraph(const QueryResult& result,
                              std::span<const std::uint32_t> path_ids,
                              LayoutKind layout,
                              std::string_view geo_attr = "loc",
                              const ForceLayoutOptions& options = {});

}  // namespace connview

#endif  // CONNVIEW_DETAILS_H_
