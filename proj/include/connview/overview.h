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

#ifndef CONNVIEW_OVERVIEW_H_
#define CONNVIEW_OVERVIEW_H_

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "connview/enumerate.h"
#include "connview/metric.h"

namespace connview {

enum class AxisSide { kRows, kCols };

/// A top-level row or column: one node, or a group of nodes sharing a
/// categorical attribute value.
struct AxisKey {
  enum class Kind { kLeaf, kGroup };

  Kind kind = Kind::kLeaf;
  NodeIndex node = 0;               // kLeaf
  std::string attribute;            // kGroup
  std::string value;                // kGroup
  bool unset = false;               // kGroup of nodes lacking the attribute
  std::vector<NodeIndex> members;   // kGroup, sorted
  bool expanded = false;            // kGroup

  bool is_group() const { return kind == Kind::kGroup; }
};

inline constexpr std::string_view kUnsetGroupValue = "(unset)";

/// Row or column as rendered: expanded groups are followed by their member
/// leaves.
struct DisplayKey {
  std::string id;   // node id, or "[attr=value]" for groups
  std::size_t top;  // index into Axis::keys()
  bool group;
  NodeIndex node;   // leaf only
  std::optional<std::string> parent;  // id of the expanded group it sits in
};

/// Ordered keys of one side of a matrix or of the table rows.
class Axis {
 public:
  Axis() = default;
  /// One leaf per node, in the given order.
  Axis(const Graph& graph, std::vector<NodeIndex> nodes);

  const std::vector<AxisKey>& keys() const { return keys_; }
  const std::vector<DisplayKey>& displayed() const { return displayed_; }
  /// Nodes the axis was created from, in their original order.
  const std::vector<NodeIndex>& leaf_nodes() const { return leaves_; }
  bool grouped() const { return !group_attribute_.empty(); }
  const std::string& group_attribute() const { return group_attribute_; }

  std::optional<std::size_t> find(std::string_view display_id) const;
  /// Displayed rows containing `node`: its leaf row (if shown) and its group
  /// row (if grouped). Unused slots are -1.
  std::array<int, 2> slots_of(NodeIndex node) const;

  /// Replaces the leaves by collapsed groups of `attribute`, sorted by value
  /// with the unset group last. Throws SemanticError unless the attribute is
  /// a categorical node attribute.
  Axis grouped_by(const Graph& graph, const std::string& attribute) const;
  /// Throws NotFoundError for an unknown group id.
  Axis with_expanded(const Graph& graph, std::string_view group_id,
                     bool expanded) const;
  Axis with_all_expanded(const Graph& graph, bool expanded) const;
  Axis ungrouped(const Graph& graph) const;
  /// new_keys[i] = keys()[perm[i]]. Throws std::invalid_argument unless
  /// `perm` is a permutation of [0, keys().size()).
  Axis permuted(const Graph& graph, std::span<const std::size_t> perm) const;
  Axis without(const Graph& graph, const std::vector<char>& drop_top) const;

 private:
  void rebuild(const Graph& graph);

  std::vector<NodeIndex> leaves_;
  std::vector<AxisKey> keys_;
  std::string group_attribute_;
  std::vector<DisplayKey> displayed_;
  std::unordered_map<std::string, std::size_t> by_id_;
  std::unordered_map<NodeIndex, std::array<int, 2>> slots_;
};

std::string group_key_id(std::string_view attribute, std::string_view value);

/// Sparse map from displayed (row, col) to the path set of that cell.
class CellGrid {
 public:
  CellGrid() = default;
  explicit CellGrid(std::size_t cols) : cols_(cols) {}

  void add(std::size_t row, std::size_t col, std::uint32_t path_id);
  /// Empty span for cells without paths.
  std::span<const std::uint32_t> at(std::size_t row, std::size_t col) const;
  std::size_t non_empty() const { return cells_.size(); }

  template <typename F>
  void for_each(F&& f) const {
    for (const auto& [key, ids] : cells_) f(key / cols_, key % cols_, ids);
  }

 private:
  std::size_t cols_ = 0;
  std::unordered_map<std::uint64_t, PathIds> cells_;
};

/// Start nodes x end nodes; cell (s, e) holds the paths from s to e. Groups
/// hold the union of their members' cells.
///
/// The matrix is an immutable view over a QueryResult: aggregation,
/// expansion and reordering return new matrices sharing the same result.
class ConnectivityMatrix {
 public:
  /// One row per resolved start node and one column per resolved end node,
  /// empty ones included.
  static ConnectivityMatrix build(std::shared_ptr<const QueryResult> result);

  const QueryResult& source() const { return *source_; }
  const std::shared_ptr<const QueryResult>& source_ptr() const {
    return source_;
  }
  const Axis& rows() const { return rows_; }
  const Axis& cols() const { return cols_; }
  const Axis& axis(AxisSide side) const {
    return side == AxisSide::kRows ? rows_ : cols_;
  }

  std::span<const std::uint32_t> cell(std::size_t row, std::size_t col) const {
    return grid_.at(row, col);
  }
  /// Cell by displayed ids; throws NotFoundError for unknown ids.
  std::span<const std::uint32_t> cell(std::string_view row_id,
                                      std::string_view col_id) const;
  const CellGrid& grid() const { return grid_; }

  ConnectivityMatrix aggregated(AxisSide side,
                                const std::string& attribute) const;
  ConnectivityMatrix expanded(AxisSide side, std::string_view group_id,
                              bool expanded = true) const;
  ConnectivityMatrix all_expanded(AxisSide side, bool expanded = true) const;
  ConnectivityMatrix ungrouped(AxisSide side) const;
  ConnectivityMatrix permuted(AxisSide side,
                              std::span<const std::size_t> perm) const;
  /// Removes top-level keys whose cells are all empty.
  ConnectivityMatrix without_empty(AxisSide side) const;

 private:
  ConnectivityMatrix(std::shared_ptr<const QueryResult> result, Axis rows,
                     Axis cols);
  ConnectivityMatrix with_axis(AxisSide side, Axis axis) const;

  std::shared_ptr<const QueryResult> source_;
  Axis rows_;
  Axis cols_;
  CellGrid grid_;
};

/// Column of the intermediate table: interior position j of paths of
/// length l, 1 <= j < l.
struct TablePosition {
  std::size_t position;
  std::size_t length;

  std::string id() const;
  bool operator==(const TablePosition&) const = default;
};

/// Columns ordered by (length, position) for lengths 2..max_length:
/// (1,2), (1,3), (2,3), (1,4), ...
std::vector<TablePosition> table_positions(std::size_t max_length);

/// Rows are the nodes found at interior positions; cell (n, (j,l)) holds the
/// paths of length l whose node at position j is n.
class IntermediateTable {
 public:
  static IntermediateTable build(std::shared_ptr<const QueryResult> result);

  const QueryResult& source() const { return *source_; }
  const std::shared_ptr<const QueryResult>& source_ptr() const {
    return source_;
  }
  const Axis& rows() const { return rows_; }
  const std::vector<TablePosition>& columns() const { return columns_; }
  std::optional<std::size_t> find_column(std::string_view id) const;

  std::span<const std::uint32_t> cell(std::size_t row, std::size_t col) const {
    return grid_.at(row, col);
  }
  std::span<const std::uint32_t> cell(std::string_view row_id,
                                      std::string_view col_id) const;
  const CellGrid& grid() const { return grid_; }

  /// Column index of (position, length); nullopt when outside the table.
  std::optional<std::size_t> column_of(std::size_t position,
                                       std::size_t length) const;

  // Only the row axis can be aggregated, expanded or reordered; the column
  // order is fixed by (length, position).
  IntermediateTable aggregated(const std::string& attribute) const;
  IntermediateTable expanded(std::string_view group_id,
                             bool expanded = true) const;
  IntermediateTable all_expanded(bool expanded = true) const;
  IntermediateTable ungrouped() const;
  IntermediateTable permuted(std::span<const std::size_t> perm) const;

 private:
  IntermediateTable(std::shared_ptr<const QueryResult> result, Axis rows);
  IntermediateTable with_rows(Axis rows) const;

  std::shared_ptr<const QueryResult> source_;
  Axis rows_;
  std::vector<TablePosition> columns_;
  CellGrid grid_;
};

}  // namespace connview

#endif  // CONNVIEW_OVERVIEW_H_
