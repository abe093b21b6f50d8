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

#include "connview/overview.h"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "connview/error.h"

namespace connview {

std::string group_key_id(std::string_view attribute, std::string_view value) {
  return "[" + std::string(attribute) + "=" + std::string(value) + "]";
}

// ---------------------------------------------------------------------------
// Axis

Axis::Axis(const Graph& graph, std::vector<NodeIndex> nodes)
    : leaves_(std::move(nodes)) {
  keys_.reserve(leaves_.size());
  for (NodeIndex n : leaves_) {
    AxisKey k;
    k.node = n;
    keys_.push_back(std::move(k));
  }
  rebuild(graph);
}

void Axis::rebuild(const Graph& graph) {
  displayed_.clear();
  by_id_.clear();
  slots_.clear();
  auto slot = [&](NodeIndex n) -> std::array<int, 2>& {
    return slots_.try_emplace(n, std::array<int, 2>{-1, -1}).first->second;
  };
  for (std::size_t t = 0; t < keys_.size(); ++t) {
    const AxisKey& k = keys_[t];
    if (!k.is_group()) {
      slot(k.node)[0] = static_cast<int>(displayed_.size());
      displayed_.push_back({graph.node(k.node).id, t, false, k.node, {}});
      continue;
    }
    std::string gid = group_key_id(k.attribute, k.value);
    int group_slot = static_cast<int>(displayed_.size());
    displayed_.push_back({gid, t, true, 0, {}});
    for (NodeIndex m : k.members) slot(m)[1] = group_slot;
    if (k.expanded) {
      for (NodeIndex m : k.members) {
        slot(m)[0] = static_cast<int>(displayed_.size());
        displayed_.push_back({graph.node(m).id, t, false, m, gid});
      }
    }
  }
  for (std::size_t i = 0; i < displayed_.size(); ++i) {
    by_id_.emplace(displayed_[i].id, i);
  }
}

std::optional<std::size_t> Axis::find(std::string_view display_id) const {
  auto it = by_id_.find(std::string(display_id));
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

std::array<int, 2> Axis::slots_of(NodeIndex node) const {
  auto it = slots_.find(node);
  return it == slots_.end() ? std::array<int, 2>{-1, -1} : it->second;
}

Axis Axis::grouped_by(const Graph& graph, const std::string& attribute) const {
  auto it = graph.schema().node_attrs.find(attribute);
  if (it == graph.schema().node_attrs.end()) {
    throw SemanticError("unknown node attribute '" + attribute + "'");
  }
  if (it->second != AttrKind::kCategorical) {
    throw SemanticError("cannot aggregate by " +
                        std::string(to_string(it->second)) + " attribute '" +
                        attribute + "'; a categorical attribute is required");
  }
  std::map<std::string, std::vector<NodeIndex>> groups;
  std::vector<NodeIndex> unset;
  for (NodeIndex n : leaves_) {
    const AttrValue* v = graph.node_attr(n, attribute);
    if (v == nullptr) {
      unset.push_back(n);
    } else {
      groups[v->text()].push_back(n);
    }
  }
  Axis out;
  out.leaves_ = leaves_;
  out.group_attribute_ = attribute;
  auto add = [&](std::string value, std::vector<NodeIndex> members,
                 bool is_unset) {
    std::sort(members.begin(), members.end());
    AxisKey k;
    k.kind = AxisKey::Kind::kGroup;
    k.attribute = attribute;
    k.value = std::move(value);
    k.unset = is_unset;
    k.members = std::move(members);
    out.keys_.push_back(std::move(k));
  };
  for (auto& [value, members] : groups) add(value, std::move(members), false);
  if (!unset.empty()) {
    add(std::string(kUnsetGroupValue), std::move(unset), true);
  }
  out.rebuild(graph);
  return out;
}

Axis Axis::with_expanded(const Graph& graph, std::string_view group_id,
                         bool expanded) const {
  Axis out = *this;
  auto idx = find(group_id);
  if (!idx || !displayed_[*idx].group) {
    throw NotFoundError("unknown group '" + std::string(group_id) + "'");
  }
  out.keys_[displayed_[*idx].top].expanded = expanded;
  out.rebuild(graph);
  return out;
}

Axis Axis::with_all_expanded(const Graph& graph, bool expanded) const {
  Axis out = *this;
  for (AxisKey& k : out.keys_) {
    if (k.is_group()) k.expanded = expanded;
  }
  out.rebuild(graph);
  return out;
}

Axis Axis::ungrouped(const Graph& graph) const {
  return Axis(graph, leaves_);
}

Axis Axis::permuted(const Graph& graph,
                    std::span<const std::size_t> perm) const {
  if (perm.size() != keys_.size()) {
    throw std::invalid_argument("permutation has the wrong size");
  }
  std::vector<char> seen(keys_.size(), 0);
  Axis out = *this;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] >= keys_.size() || seen[perm[i]]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[perm[i]] = 1;
    out.keys_[i] = keys_[perm[i]];
  }
  if (!grouped()) {
    for (std::size_t i = 0; i < out.keys_.size(); ++i) {
      out.leaves_[i] = out.keys_[i].node;
    }
  }
  out.rebuild(graph);
  return out;
}

Axis Axis::without(const Graph& graph, const std::vector<char>& drop_top) const {
  Axis out;
  out.group_attribute_ = group_attribute_;
  std::unordered_map<NodeIndex, char> kept;
  for (std::size_t t = 0; t < keys_.size(); ++t) {
    if (drop_top[t]) continue;
    out.keys_.push_back(keys_[t]);
    if (keys_[t].is_group()) {
      for (NodeIndex m : keys_[t].members) kept[m] = 1;
    } else {
      kept[keys_[t].node] = 1;
    }
  }
  for (NodeIndex n : leaves_) {
    if (kept.count(n)) out.leaves_.push_back(n);
  }
  out.rebuild(graph);
  return out;
}

// ---------------------------------------------------------------------------
// CellGrid

void CellGrid::add(std::size_t row, std::size_t col, std::uint32_t path_id) {
  cells_[static_cast<std::uint64_t>(row) * cols_ + col].push_back(path_id);
}

std::span<const std::uint32_t> CellGrid::at(std::size_t row,
                                            std::size_t col) const {
  if (cols_ == 0) return {};
  auto it = cells_.find(static_cast<std::uint64_t>(row) * cols_ + col);
  if (it == cells_.end()) return {};
  return it->second;
}

// ---------------------------------------------------------------------------
// ConnectivityMatrix

ConnectivityMatrix::ConnectivityMatrix(
    std::shared_ptr<const QueryResult> result, Axis rows, Axis cols)
    : source_(std::move(result)),
      rows_(std::move(rows)),
      cols_(std::move(cols)),
      grid_(cols_.displayed().size()) {
  const std::vector<Path>& paths = source_->paths;
  for (std::uint32_t i = 0; i < paths.size(); ++i) {
    auto rs = rows_.slots_of(paths[i].start());
    auto cs = cols_.slots_of(paths[i].end());
    for (int r : rs) {
      if (r < 0) continue;
      for (int c : cs) {
        if (c >= 0) grid_.add(r, c, i);
      }
    }
  }
}

ConnectivityMatrix ConnectivityMatrix::build(
    std::shared_ptr<const QueryResult> result) {
  const Graph& g = *result->graph;
  Axis rows(g, result->start_nodes);
  Axis cols(g, result->end_nodes);
  return ConnectivityMatrix(std::move(result), std::move(rows),
                            std::move(cols));
}

std::span<const std::uint32_t> ConnectivityMatrix::cell(
    std::string_view row_id, std::string_view col_id) const {
  auto r = rows_.find(row_id);
  auto c = cols_.find(col_id);
  if (!r || !c) {
    throw NotFoundError("unknown matrix cell (" + std::string(row_id) + ", " +
                        std::string(col_id) + ")");
  }
  return grid_.at(*r, *c);
}

ConnectivityMatrix ConnectivityMatrix::with_axis(AxisSide side,
                                                 Axis axis) const {
  if (side == AxisSide::kRows) {
    return ConnectivityMatrix(source_, std::move(axis), cols_);
  }
  return ConnectivityMatrix(source_, rows_, std::move(axis));
}

ConnectivityMatrix ConnectivityMatrix::aggregated(
    AxisSide side, const std::string& attribute) const {
  return with_axis(side, axis(side).grouped_by(*source_->graph, attribute));
}

ConnectivityMatrix ConnectivityMatrix::expanded(AxisSide side,
                                                std::string_view group_id,
                                                bool expanded) const {
  return with_axis(side, axis(side).with_expanded(*source_->graph, group_id,
                                                  expanded));
}

ConnectivityMatrix ConnectivityMatrix::all_expanded(AxisSide side,
                                                    bool expanded) const {
  return with_axis(side,
                   axis(side).with_all_expanded(*source_->graph, expanded));
}

ConnectivityMatrix ConnectivityMatrix::ungrouped(AxisSide side) const {
  return with_axis(side, axis(side).ungrouped(*source_->graph));
}

ConnectivityMatrix ConnectivityMatrix::permuted(
    AxisSide side, std::span<const std::size_t> perm) const {
  return with_axis(side, axis(side).permuted(*source_->graph, perm));
}

ConnectivityMatrix ConnectivityMatrix::without_empty(AxisSide side) const {
  const Axis& a = axis(side);
  std::vector<char> drop(a.keys().size(), 1);
  grid_.for_each([&](std::size_t r, std::size_t c, const PathIds&) {
    std::size_t slot = side == AxisSide::kRows ? r : c;
    drop[a.displayed()[slot].top] = 0;
  });
  return with_axis(side, a.without(*source_->graph, drop));
}

// ---------------------------------------------------------------------------
// IntermediateTable

std::string TablePosition::id() const {
  return "(" + std::to_string(position) + "," + std::to_string(length) + ")";
}

std::vector<TablePosition> table_positions(std::size_t max_length) {
  std::vector<TablePosition> cols;
  for (std::size_t l = 2; l <= max_length; ++l) {
    for (std::size_t j = 1; j < l; ++j) cols.push_back({j, l});
  }
  return cols;
}

IntermediateTable::IntermediateTable(std::shared_ptr<const QueryResult> result,
                                     Axis rows)
    : source_(std::move(result)),
      rows_(std::move(rows)),
      columns_(table_positions(source_->max_length())),
      grid_(columns_.size()) {
  const std::vector<Path>& paths = source_->paths;
  for (std::uint32_t i = 0; i < paths.size(); ++i) {
    const std::size_t len = paths[i].length();
    for (std::size_t j = 1; j < len; ++j) {
      std::size_t col = *column_of(j, len);
      for (int r : rows_.slots_of(paths[i].node_at(j))) {
        if (r >= 0) grid_.add(r, col, i);
      }
    }
  }
}

IntermediateTable IntermediateTable::build(
    std::shared_ptr<const QueryResult> result) {
  std::vector<NodeIndex> interior;
  for (const Path& p : result->paths) {
    for (std::size_t j = 1; j < p.length(); ++j) {
      interior.push_back(p.node_at(j));
    }
  }
  std::sort(interior.begin(), interior.end());
  interior.erase(std::unique(interior.begin(), interior.end()),
                 interior.end());
  Axis rows(*result->graph, std::move(interior));
  return IntermediateTable(std::move(result), std::move(rows));
}

std::optional<std::size_t> IntermediateTable::column_of(
    std::size_t position, std::size_t length) const {
  if (length < 2 || position < 1 || position >= length) return std::nullopt;
  std::size_t idx = (length - 2) * (length - 1) / 2 + (position - 1);
  if (idx >= columns_.size()) return std::nullopt;
  return idx;
}

std::optional<std::size_t> IntermediateTable::find_column(
    std::string_view id) const {
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    if (columns_[c].id() == id) return c;
  }
  return std::nullopt;
}

std::span<const std::uint32_t> IntermediateTable::cell(
    std::string_view row_id, std::string_view col_id) const {
  auto r = rows_.find(row_id);
  auto c = find_column(col_id);
  if (!r || !c) {
    throw NotFoundError("unknown table cell (" + std::string(row_id) + ", " +
                        std::string(col_id) + ")");
  }
  return grid_.at(*r, *c);
}

IntermediateTable IntermediateTable::with_rows(Axis rows) const {
  return IntermediateTable(source_, std::move(rows));
}

IntermediateTable IntermediateTable::aggregated(
    const std::string& attribute) const {
  return with_rows(rows_.grouped_by(*source_->graph, attribute));
}

IntermediateTable IntermediateTable::expanded(std::string_view group_id,
                                              bool expanded) const {
  return with_rows(rows_.with_expanded(*source_->graph, group_id, expanded));
}

IntermediateTable IntermediateTable::all_expanded(bool expanded) const {
  return with_rows(rows_.with_all_expanded(*source_->graph, expanded));
}

IntermediateTable IntermediateTable::ungrouped() const {
  return with_rows(rows_.ungrouped(*source_->graph));
}

IntermediateTable IntermediateTable::permuted(
    std::span<const std::size_t> perm) const {
  return with_rows(rows_.permuted(*source_->graph, perm));
}

}  // namespace connview
