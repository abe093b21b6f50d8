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

#ifndef CONNVIEW_EXPORT_H_
#define CONNVIEW_EXPORT_H_

#include <span>
#include <string>
#include <vector>

#include "connview/details.h"
#include "connview/highlight.h"
#include "connview/metric.h"
#include "connview/overview.h"
#include "json.hpp"

namespace connview {

nlohmann::json attr_value_to_json(const AttrValue& value);
nlohmann::json attrs_to_json(const AttrMap& attrs);

/// {"kind":"undefined","value":null} | {"kind":"scalar","value":v}
/// | {"kind":"vector","values":[...]}
nlohmann::json metric_to_json(const MetricResult& result);

/// Row/column key: {"id","kind":"leaf"[,"parent"]} or
/// {"id","kind":"group","attribute","value","members","expanded"}.
nlohmann::json axis_keys_to_json(const Graph& graph, const Axis& axis);

/// {"metric","rows":[key],"cols":[key],
///  "cells":[{"r","c","metric","count","aggregated"}],
///  "rowAttrs":{id:{attr:[values]}},"colAttrs":{...}}
///
/// Cells cover every displayed row x column in display order; aggregated is
/// true when either key is a group. rowAttrs/colAttrs carry the raw
/// quantitative node attribute values of each key (all members for groups).
nlohmann::json matrix_to_json(const ConnectivityMatrix& matrix,
                              const Metric& metric);
nlohmann::json table_to_json(const IntermediateTable& table,
                             const Metric& metric);

/// Header of column ids (first field empty), then one line per row id with
/// the scalar metric per cell; undefined cells are empty and vector values
/// are joined with ';'.
std::string matrix_to_csv(const ConnectivityMatrix& matrix,
                          const Metric& metric);
std::string table_to_csv(const IntermediateTable& table, const Metric& metric);

/// {"startNodes","endNodes","paths","maxLength","lengths":{"l":count}}
nlohmann::json summary_to_json(const QueryResult& result);

/// {"index","nodes":[ids],"edges":[{"id","source","target","attrs"}]}
nlohmann::json path_to_json(const QueryResult& result, std::uint32_t path_id);

nlohmann::json motifs_to_json(const QueryResult& result,
                              const std::vector<Motif>& motifs,
                              std::string_view display_attr);

/// {"layout":"force"|"spatial","nodes":[{"id","x","y","attrs"}],
///  "edges":[{"id","source","target","attrs"}]}
nlohmann::json subgraph_to_json(const QueryResult& result,
                                const SubgraphView& view);

nlohmann::json cells_to_json(const std::vector<CellRef>& cells);

/// Shortest round-trip decimal form ("2", "0.5").
std::string format_number(double value);

}  // namespace connview

#endif  // CONNVIEW_EXPORT_H_
