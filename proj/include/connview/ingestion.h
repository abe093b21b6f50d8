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

#ifndef CONNVIEW_INGESTION_H_
#define CONNVIEW_INGESTION_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "connview/graph.h"

namespace connview {

// Typed CSV graphs.
//
//   nodes.csv  id,<name:kind>,...
//   edges.csv  id,source,target,<name:kind>,...
//
// kind is one of string, float, float[unit], geo_lat, geo_lon. A geo_lat and
// a geo_lon column with the same name form one geo attribute. Empty cells are
// absent attributes.

Graph parse_csv_graph(std::string_view nodes_csv, std::string_view edges_csv);
Graph load_csv(const std::filesystem::path& nodes_file,
               const std::filesystem::path& edges_file);

/// Writes the typed-CSV form of a graph (the inverse of parse_csv_graph).
std::pair<std::string, std::string> export_csv(const Graph& graph);

// JSON graphs:
//
//   {"schema":{"nodes":{name:kind},"edges":{name:kind}},
//    "nodes":[{"id":..,"attrs":{..}}],
//    "edges":[{"id":..,"source":..,"target":..,"attrs":{..}}]}
//
// kind is categorical | quantitative | geo. Values are strings, numbers (or
// {"value":v,"unit":u}) and {"lat":..,"lon":..}. "schema" may be omitted, in
// which case kinds are inferred from the values. Errors carry a JSON pointer
// to the offending element.

Graph parse_json_graph(std::string_view text);
Graph load_json(const std::filesystem::path& file);
/// Deterministic, byte-stable document: elements in id order, keys sorted.
std::string export_json(const Graph& graph);

/// Column names (case-insensitive) understood by the flight adapter. The
/// first matching alias is used.
struct FlightColumns {
  static constexpr std::string_view kOrigin[] = {"ORIGIN"};
  static constexpr std::string_view kDest[] = {"DEST"};
  static constexpr std::string_view kCarrier[] = {"OP_UNIQUE_CARRIER",
                                                  "OP_CARRIER", "CARRIER",
                                                  "UNIQUE_CARRIER"};
  static constexpr std::string_view kDepDelay[] = {"DEP_DELAY"};
  static constexpr std::string_view kDepTime[] = {"DEP_TIME"};
  static constexpr std::string_view kDate[] = {"FL_DATE"};
  static constexpr std::string_view kFlightNum[] = {"OP_CARRIER_FL_NUM",
                                                    "FL_NUM"};
  static constexpr std::string_view kOriginState[] = {"ORIGIN_STATE_ABR"};
  static constexpr std::string_view kDestState[] = {"DEST_STATE_ABR"};
  static constexpr std::string_view kOriginCity[] = {"ORIGIN_CITY_NAME"};
  static constexpr std::string_view kDestCity[] = {"DEST_CITY_NAME"};
};

/// Builds an airport graph from a BTS on-time-performance extract.
///
/// Nodes are airports (id = airport code) with "code", "state" and "city"
/// when those columns exist. Every data row becomes one edge "F<row>" with
/// "carrier", "dep_delay" (minutes), "dep_time" (hhmm), "date" and
/// "flight". ORIGIN, DEST and one carrier column are required.
///
/// The optional airports table (columns code|iata, lat|latitude,
/// lon|longitude) adds a geo attribute "loc" to the matching airports.
Graph parse_flights(std::string_view flights_csv,
                    std::string_view airports_csv = {});
Graph load_flights(const std::filesystem::path& flights_file,
                   const std::filesystem::path& airports_file = {});

/// The seven-node fixture used throughout the tests:
/// A,B,C region=west; D,E region=mid; F,G region=east;
/// e1 A>D, e2 B>D, e3 B>F, e4 C>E, e5 D>F, e6 D>G, e7 E>G.
Graph make_g0();

std::string read_file(const std::filesystem::path& file);

}  // namespace connview

#endif  // CONNVIEW_INGESTION_H_
