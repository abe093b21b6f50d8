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

#ifndef CONNVIEW_HIGHLIGHT_H_
#define CONNVIEW_HIGHLIGHT_H_

#include <string>
#include <vector>

#include "connview/overview.h"

namespace connview {

/// A cell addressed by displayed row and column ids. Table column ids are
/// "(j,l)".
struct CellRef {
  std::string row;
  std::string col;

  bool operator==(const CellRef&) const = default;
  auto operator<=>(const CellRef&) const = default;
};

/// Matrix cells sharing at least one path with the given table cell, in
/// display order (rows, then columns). Throws NotFoundError for an unknown
/// cell and std::invalid_argument if the views come from different results.
std::vector<CellRef> highlight_from_table(const IntermediateTable& table,
                                          const ConnectivityMatrix& matrix,
                                          const CellRef& table_cell);

/// Table cells sharing at least one path with the given matrix cell.
std::vector<CellRef> highlight_from_matrix(const ConnectivityMatrix& matrix,
                                           const IntermediateTable& table,
                                           const CellRef& matrix_cell);

}  // namespace connview

#endif  // CONNVIEW_HIGHLIGHT_H_
