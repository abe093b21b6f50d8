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

#include "connview/highlight.h"

#include <set>
#include <stdexcept>

namespace connview {

namespace {

void check_same_source(const ConnectivityMatrix& matrix,
                       const IntermediateTable& table) {
  if (matrix.source_ptr() != table.source_ptr()) {
    throw std::invalid_argument("matrix and table belong to different results");
  }
}

}  // namespace

std::vector<CellRef> highlight_from_table(const IntermediateTable& table,
                                          const ConnectivityMatrix& matrix,
                                          const CellRef& table_cell) {
  check_same_source(matrix, table);
  auto ids = table.cell(table_cell.row, table_cell.col);
  const auto& paths = matrix.source().paths;
  std::set<std::pair<int, int>> hits;
  for (std::uint32_t id : ids) {
    auto rs = matrix.rows().slots_of(paths[id].start());
    auto cs = matrix.cols().slots_of(paths[id].end());
    for (int r : rs) {
      if (r < 0) continue;
      for (int c : cs) {
        if (c >= 0) hits.emplace(r, c);
      }
    }
  }
  std::vector<CellRef> out;
  out.reserve(hits.size());
  for (auto [r, c] : hits) {
    out.push_back({matrix.rows().displayed()[r].id,
                   matrix.cols().displayed()[c].id});
  }
  return out;
}

std::vector<CellRef> highlight_from_matrix(const ConnectivityMatrix& matrix,
                                           const IntermediateTable& table,
                                           const CellRef& matrix_cell) {
  check_same_source(matrix, table);
  auto ids = matrix.cell(matrix_cell.row, matrix_cell.col);
  const auto& paths = table.source().paths;
  std::set<std::pair<int, int>> hits;
  for (std::uint32_t id : ids) {
    const Path& p = paths[id];
    for (std::size_t j = 1; j < p.length(); ++j) {
      auto col = table.column_of(j, p.length());
      if (!col) continue;
      for (int r : table.rows().slots_of(p.node_at(j))) {
        if (r >= 0) hits.emplace(r, static_cast<int>(*col));
      }
    }
  }
  std::vector<CellRef> out;
  out.reserve(hits.size());
  for (auto [r, c] : hits) {
    out.push_back({table.rows().displayed()[r].id, table.columns()[c].id()});
  }
  return out;
}

}  // namespace connview
