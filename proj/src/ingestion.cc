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

#include "connview/ingestion.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "connview/csv.h"
#include "connview/error.h"
#include "connview/export.h"
#include "json.hpp"

namespace connview {

using json = nlohmann::json;

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw DataError("cannot open '" + file.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

// ---------------------------------------------------------------------------
// Typed CSV

enum class Role { kId, kSource, kTarget, kAttr, kGeoLat, kGeoLon };

struct Column {
  Role role;
  std::string name;
  AttrKind kind = AttrKind::kCategorical;
  std::string unit;
  std::size_t partner = 0;  // geo_lat <-> geo_lon column index
};

struct Header {
  std::vector<Column> columns;
  AttrSchema schema;
  std::size_t id = 0, source = 0, target = 0;
};

double parse_number(const std::string& cell, std::string_view where) {
  double value = 0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  if (!cell.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || cell.empty()) {
    throw DataError(std::string(where) + ": cannot parse '" + cell +
                    "' as a number");
  }
  return value;
}

Header parse_header(const CsvRow& row, bool edges, std::string_view file) {
  Header h;
  std::set<std::string> reserved_seen;
  std::map<std::string, std::pair<int, int>> geo_cols;  // name -> (lat, lon)
  auto fail = [&](const std::string& msg) {
    throw DataError(std::string(file) + " header: " + msg);
  };

  for (std::size_t i = 0; i < row.size(); ++i) {
    const std::string& cell = row[i];
    Column col;
    auto colon = cell.rfind(':');
    if (colon == std::string::npos) {
      if (cell == "id" || (edges && (cell == "source" || cell == "target"))) {
        if (!reserved_seen.insert(cell).second) {
          fail("reserved column '" + cell + "' appears twice");
        }
        col.name = cell;
        if (cell == "id") {
          col.role = Role::kId;
          h.id = i;
        } else if (cell == "source") {
          col.role = Role::kSource;
          h.source = i;
        } else {
          col.role = Role::kTarget;
          h.target = i;
        }
        h.columns.push_back(col);
        continue;
      }
      fail("column '" + cell + "' lacks a type (expected name:kind)");
    }
    col.name = cell.substr(0, colon);
    std::string type = cell.substr(colon + 1);
    if (col.name.empty()) fail("empty attribute name in '" + cell + "'");
    if (col.name == "id" || (edges && (col.name == "source" ||
                                       col.name == "target"))) {
      fail("attribute name '" + col.name + "' is reserved");
    }
    if (type == "string") {
      col.role = Role::kAttr;
      col.kind = AttrKind::kCategorical;
    } else if (type == "float") {
      col.role = Role::kAttr;
      col.kind = AttrKind::kQuantitative;
    } else if (type.starts_with("float[") && type.ends_with("]")) {
      col.role = Role::kAttr;
      col.kind = AttrKind::kQuantitative;
      col.unit = type.substr(6, type.size() - 7);
    } else if (type == "geo_lat" || type == "geo_lon") {
      bool lat = type == "geo_lat";
      col.role = lat ? Role::kGeoLat : Role::kGeoLon;
      col.kind = AttrKind::kGeo;
      auto& slot = geo_cols.try_emplace(col.name, -1, -1).first->second;
      int& mine = lat ? slot.first : slot.second;
      if (mine != -1) fail("geo column '" + cell + "' appears twice");
      mine = static_cast<int>(i);
    } else {
      fail("unknown type '" + type + "' in column '" + cell + "'");
    }
    if (col.role == Role::kAttr) {
      if (!h.schema.emplace(col.name, col.kind).second) {
        fail("attribute '" + col.name + "' appears twice");
      }
    }
    h.columns.push_back(col);
  }

  if (!reserved_seen.count("id")) fail("missing reserved column 'id'");
  if (edges && (!reserved_seen.count("source") ||
                !reserved_seen.count("target"))) {
    fail("missing reserved column 'source' or 'target'");
  }
  for (const auto& [name, cols] : geo_cols) {
    if (cols.first < 0 || cols.second < 0) {
      fail("geo attribute '" + name + "' needs both geo_lat and geo_lon");
    }
    if (!h.schema.emplace(name, AttrKind::kGeo).second) {
      fail("attribute '" + name + "' appears twice");
    }
    h.columns[cols.first].partner = cols.second;
    h.columns[cols.second].partner = cols.first;
  }
  return h;
}

AttrMap parse_attrs(const CsvRow& row, const Header& h, std::string_view file,
                    std::size_t line) {
  AttrMap attrs;
  for (std::size_t i = 0; i < h.columns.size(); ++i) {
    const Column& col = h.columns[i];
    const std::string& cell = row[i];
    std::string where = std::string(file) + " row " + std::to_string(line) +
                        ", column '" + col.name + "'";
    try {
      if (col.role == Role::kAttr) {
        if (cell.empty()) continue;
        if (col.kind == AttrKind::kCategorical) {
          attrs.emplace(col.name, AttrValue::categorical(cell));
        } else {
          attrs.emplace(col.name,
                        AttrValue::quantity(parse_number(cell, where),
                                            col.unit));
        }
      } else if (col.role == Role::kGeoLat) {
        const std::string& lon = row[col.partner];
        if (cell.empty() && lon.empty()) continue;
        if (cell.empty() || lon.empty()) {
          throw DataError(where + ": geo latitude and longitude must both "
                                  "be present or both empty");
        }
        attrs.emplace(col.name, AttrValue::geo(parse_number(cell, where),
                                               parse_number(lon, where)));
      }
    } catch (const DataError& e) {
      std::string msg = e.what();
      if (msg.starts_with(file)) throw;
      throw DataError(where + ": " + msg);
    }
  }
  return attrs;
}

std::vector<CsvRow> data_rows(std::string_view text, std::string_view file,
                              Header& header, bool edges) {
  std::vector<CsvRow> rows = parse_csv(text);
  if (rows.empty()) throw DataError(std::string(file) + ": missing header");
  header = parse_header(rows.front(), edges, file);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != header.columns.size()) {
      throw DataError(std::string(file) + " row " + std::to_string(r + 1) +
                      ": expected " + std::to_string(header.columns.size()) +
                      " fields, got " + std::to_string(rows[r].size()));
    }
  }
  rows.erase(rows.begin());
  return rows;
}

// ---------------------------------------------------------------------------
// JSON

json kinds_to_json(const AttrSchema& schema) {
  json out = json::object();
  for (const auto& [name, kind] : schema) out[name] = to_string(kind);
  return out;
}

std::optional<AttrKind> infer_kind(const json& v) {
  if (v.is_string()) return AttrKind::kCategorical;
  if (v.is_number()) return AttrKind::kQuantitative;
  if (v.is_object() && v.contains("value")) return AttrKind::kQuantitative;
  if (v.is_object() && v.contains("lat") && v.contains("lon")) {
    return AttrKind::kGeo;
  }
  return std::nullopt;
}

AttrValue value_from_json(const json& v, AttrKind kind,
                          const std::string& where) {
  auto bad = [&](const std::string& expect) -> DataError {
    return DataError(where + ": expected " + expect + ", got " + v.dump());
  };
  try {
    switch (kind) {
      case AttrKind::kCategorical:
        if (!v.is_string()) throw bad("a string");
        return AttrValue::categorical(v.get<std::string>());
      case AttrKind::kQuantitative:
        if (v.is_number()) return AttrValue::quantity(v.get<double>());
        if (v.is_object() && v.contains("value") && v["value"].is_number()) {
          std::string unit;
          if (v.contains("unit")) {
            if (!v["unit"].is_string()) throw bad("a string unit");
            unit = v["unit"].get<std::string>();
          }
          return AttrValue::quantity(v["value"].get<double>(), unit);
        }
        throw bad("a number");
      case AttrKind::kGeo:
        if (v.is_object() && v.contains("lat") && v.contains("lon") &&
            v["lat"].is_number() && v["lon"].is_number()) {
          return AttrValue::geo(v["lat"].get<double>(),
                                v["lon"].get<double>());
        }
        throw bad("{\"lat\":..,\"lon\":..}");
    }
  } catch (const DataError& e) {
    std::string msg = e.what();
    if (msg.starts_with(where)) throw;
    throw DataError(where + ": " + msg);
  }
  throw bad("a value");
}

AttrSchema schema_from_json(const json& j, const std::string& where) {
  AttrSchema schema;
  if (!j.is_object()) throw DataError(where + ": expected an object");
  for (const auto& [name, kind] : j.items()) {
    auto parsed = kind.is_string() ? parse_attr_kind(kind.get<std::string>())
                                   : std::nullopt;
    if (!parsed) {
      throw DataError(where + "/" + name + ": unknown attribute kind " +
                      kind.dump());
    }
    schema.emplace(name, *parsed);
  }
  return schema;
}

AttrMap attrs_from_json(const json& element, AttrSchema& schema,
                        bool infer, const std::string& where) {
  AttrMap attrs;
  if (!element.contains("attrs")) return attrs;
  const json& a = element["attrs"];
  if (!a.is_object()) throw DataError(where + "/attrs: expected an object");
  for (const auto& [name, value] : a.items()) {
    std::string at = where + "/attrs/" + name;
    if (value.is_null()) continue;
    auto it = schema.find(name);
    if (it == schema.end()) {
      if (!infer) throw DataError(at + ": attribute not declared in schema");
      auto kind = infer_kind(value);
      if (!kind) throw DataError(at + ": cannot infer attribute kind");
      it = schema.emplace(name, *kind).first;
    }
    attrs.emplace(name, value_from_json(value, it->second, at));
  }
  return attrs;
}

std::string required_string(const json& element, const char* key,
                            const std::string& where) {
  if (!element.contains(key) || !element[key].is_string()) {
    throw DataError(where + "/" + key + ": expected a string");
  }
  return element[key].get<std::string>();
}

// ---------------------------------------------------------------------------
// Flights

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

template <std::size_t N>
std::optional<std::size_t> find_column(const CsvRow& header,
                                       const std::string_view (&aliases)[N]) {
  for (std::string_view alias : aliases) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (upper(header[i]) == alias) return i;
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> find_column(const CsvRow& header,
                                       std::initializer_list<std::string_view> aliases) {
  for (std::string_view alias : aliases) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (upper(header[i]) == upper(alias)) return i;
    }
  }
  return std::nullopt;
}

}  // namespace

Graph parse_csv_graph(std::string_view nodes_csv, std::string_view edges_csv) {
  Header nh, eh;
  std::vector<CsvRow> node_rows = data_rows(nodes_csv, "nodes.csv", nh, false);
  std::vector<CsvRow> edge_rows = data_rows(edges_csv, "edges.csv", eh, true);

  GraphSchema schema{nh.schema, eh.schema};
  std::vector<Node> nodes;
  nodes.reserve(node_rows.size());
  for (std::size_t r = 0; r < node_rows.size(); ++r) {
    CsvRow& row = node_rows[r];
    nodes.push_back(
        Node{row[nh.id], parse_attrs(row, nh, "nodes.csv", r + 2)});
  }
  std::vector<Edge> edges;
  edges.reserve(edge_rows.size());
  for (std::size_t r = 0; r < edge_rows.size(); ++r) {
    CsvRow& row = edge_rows[r];
    edges.push_back(Edge{row[eh.id], row[eh.source], row[eh.target],
                         parse_attrs(row, eh, "edges.csv", r + 2)});
  }
  return Graph::build(std::move(nodes), std::move(edges), std::move(schema));
}

Graph load_csv(const std::filesystem::path& nodes_file,
               const std::filesystem::path& edges_file) {
  return parse_csv_graph(read_file(nodes_file), read_file(edges_file));
}

std::pair<std::string, std::string> export_csv(const Graph& graph) {
  auto header_for = [](const AttrSchema& schema, auto units_of) {
    std::string out;
    for (const auto& [name, kind] : schema) {
      switch (kind) {
        case AttrKind::kCategorical:
          out += "," + csv_escape(name + ":string");
          break;
        case AttrKind::kQuantitative: {
          std::string unit = units_of(name);
          out += "," + csv_escape(name + (unit.empty() ? ":float"
                                                       : ":float[" + unit + "]"));
          break;
        }
        case AttrKind::kGeo:
          out += "," + csv_escape(name + ":geo_lat") + "," +
                 csv_escape(name + ":geo_lon");
          break;
      }
    }
    return out;
  };
  auto cells_for = [](const AttrSchema& schema, const AttrMap& attrs) {
    std::string out;
    for (const auto& [name, kind] : schema) {
      auto it = attrs.find(name);
      if (kind == AttrKind::kGeo) {
        if (it == attrs.end()) {
          out += ",,";
        } else {
          out += "," + format_number(it->second.point().lat) + "," +
                 format_number(it->second.point().lon);
        }
        continue;
      }
      out += ",";
      if (it == attrs.end()) continue;
      out += kind == AttrKind::kCategorical
                 ? csv_escape(it->second.text())
                 : format_number(it->second.number());
    }
    return out;
  };
  auto unit_lookup = [](const auto& items) {
    return [&items](const std::string& name) -> std::string {
      for (const auto& item : items) {
        auto it = item.attrs.find(name);
        if (it != item.attrs.end()) return it->second.unit();
      }
      return {};
    };
  };

  const GraphSchema& schema = graph.schema();
  std::string nodes = "id" + header_for(schema.node_attrs,
                                        unit_lookup(graph.nodes())) + "\n";
  for (const Node& n : graph.nodes()) {
    nodes += csv_escape(n.id) + cells_for(schema.node_attrs, n.attrs) + "\n";
  }
  std::string edges = "id,source,target" +
                      header_for(schema.edge_attrs, unit_lookup(graph.edges())) +
                      "\n";
  for (const Edge& e : graph.edges()) {
    edges += csv_escape(e.id) + "," + csv_escape(e.source) + "," +
             csv_escape(e.target) + cells_for(schema.edge_attrs, e.attrs) +
             "\n";
  }
  return {std::move(nodes), std::move(edges)};
}

Graph parse_json_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw DataError("/: expected an object");

  GraphSchema schema;
  bool infer = !doc.contains("schema");
  if (!infer) {
    const json& s = doc["schema"];
    if (!s.is_object()) throw DataError("/schema: expected an object");
    if (s.contains("nodes")) {
      schema.node_attrs = schema_from_json(s["nodes"], "/schema/nodes");
    }
    if (s.contains("edges")) {
      schema.edge_attrs = schema_from_json(s["edges"], "/schema/edges");
    }
  }
  for (const char* key : {"nodes", "edges"}) {
    if (!doc.contains(key) || !doc[key].is_array()) {
      throw DataError(std::string("/") + key + ": expected an array");
    }
  }

  std::vector<Node> nodes;
  std::unordered_set<std::string> node_ids;
  const json& jn = doc["nodes"];
  for (std::size_t i = 0; i < jn.size(); ++i) {
    std::string where = "/nodes/" + std::to_string(i);
    if (!jn[i].is_object()) throw DataError(where + ": expected an object");
    Node n{required_string(jn[i], "id", where),
           attrs_from_json(jn[i], schema.node_attrs, infer, where)};
    if (n.id.empty()) throw DataError(where + "/id: empty node id");
    if (!node_ids.insert(n.id).second) {
      throw DataError(where + "/id: duplicate node id '" + n.id + "'");
    }
    nodes.push_back(std::move(n));
  }

  std::vector<Edge> edges;
  std::unordered_set<std::string> edge_ids;
  const json& je = doc["edges"];
  for (std::size_t i = 0; i < je.size(); ++i) {
    std::string where = "/edges/" + std::to_string(i);
    if (!je[i].is_object()) throw DataError(where + ": expected an object");
    Edge e{required_string(je[i], "id", where),
           required_string(je[i], "source", where),
           required_string(je[i], "target", where),
           attrs_from_json(je[i], schema.edge_attrs, infer, where)};
    if (e.id.empty()) throw DataError(where + "/id: empty edge id");
    if (!edge_ids.insert(e.id).second) {
      throw DataError(where + "/id: duplicate edge id '" + e.id + "'");
    }
    for (const std::string* endpoint : {&e.source, &e.target}) {
      if (!node_ids.count(*endpoint)) {
        throw DataError(where + ": edge '" + e.id +
                        "' references missing node '" + *endpoint + "'");
      }
    }
    edges.push_back(std::move(e));
  }
  return Graph::build(std::move(nodes), std::move(edges), std::move(schema));
}

Graph load_json(const std::filesystem::path& file) {
  return parse_json_graph(read_file(file));
}

std::string export_json(const Graph& graph) {
  json doc;
  doc["schema"] = {{"nodes", kinds_to_json(graph.schema().node_attrs)},
                   {"edges", kinds_to_json(graph.schema().edge_attrs)}};
  json nodes = json::array();
  for (const Node& n : graph.nodes()) {
    nodes.push_back({{"id", n.id}, {"attrs", attrs_to_json(n.attrs)}});
  }
  json edges = json::array();
  for (const Edge& e : graph.edges()) {
    edges.push_back({{"id", e.id},
                     {"source", e.source},
                     {"target", e.target},
                     {"attrs", attrs_to_json(e.attrs)}});
  }
  doc["nodes"] = std::move(nodes);
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

Graph parse_flights(std::string_view flights_csv,
                    std::string_view airports_csv) {
  std::vector<CsvRow> rows = parse_csv(flights_csv);
  if (rows.empty()) throw DataError("flights: missing header");
  const CsvRow& header = rows.front();

  auto origin = find_column(header, FlightColumns::kOrigin);
  auto dest = find_column(header, FlightColumns::kDest);
  auto carrier = find_column(header, FlightColumns::kCarrier);
  if (!origin || !dest || !carrier) {
    throw DataError("flights: ORIGIN, DEST and a carrier column are required");
  }
  auto delay = find_column(header, FlightColumns::kDepDelay);
  auto dep_time = find_column(header, FlightColumns::kDepTime);
  auto date = find_column(header, FlightColumns::kDate);
  auto flight = find_column(header, FlightColumns::kFlightNum);
  auto origin_state = find_column(header, FlightColumns::kOriginState);
  auto dest_state = find_column(header, FlightColumns::kDestState);
  auto origin_city = find_column(header, FlightColumns::kOriginCity);
  auto dest_city = find_column(header, FlightColumns::kDestCity);

  GraphSchema schema;
  schema.node_attrs.emplace("code", AttrKind::kCategorical);
  if (origin_state || dest_state) {
    schema.node_attrs.emplace("state", AttrKind::kCategorical);
  }
  if (origin_city || dest_city) {
    schema.node_attrs.emplace("city", AttrKind::kCategorical);
  }
  schema.edge_attrs.emplace("carrier", AttrKind::kCategorical);
  if (delay) schema.edge_attrs.emplace("dep_delay", AttrKind::kQuantitative);
  if (dep_time) schema.edge_attrs.emplace("dep_time", AttrKind::kQuantitative);
  if (date) schema.edge_attrs.emplace("date", AttrKind::kCategorical);
  if (flight) schema.edge_attrs.emplace("flight", AttrKind::kCategorical);

  std::map<std::string, Node> airports;
  auto touch_airport = [&](const std::string& code,
                           std::optional<std::size_t> state_col,
                           std::optional<std::size_t> city_col,
                           const CsvRow& row) {
    Node& n = airports[code];
    if (n.id.empty()) {
      n.id = code;
      n.attrs.emplace("code", AttrValue::categorical(code));
    }
    if (state_col && !row[*state_col].empty()) {
      n.attrs.emplace("state", AttrValue::categorical(row[*state_col]));
    }
    if (city_col && !row[*city_col].empty()) {
      n.attrs.emplace("city", AttrValue::categorical(row[*city_col]));
    }
  };

  std::vector<Edge> edges;
  const std::size_t width = std::to_string(rows.size()).size();
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const CsvRow& row = rows[r];
    std::string where = "flights row " + std::to_string(r + 1);
    if (row.size() < header.size()) {
      throw DataError(where + ": expected " + std::to_string(header.size()) +
                      " fields, got " + std::to_string(row.size()));
    }
    const std::string& from = row[*origin];
    const std::string& to = row[*dest];
    if (from.empty() || to.empty()) {
      throw DataError(where + ": empty ORIGIN or DEST");
    }
    touch_airport(from, origin_state, origin_city, row);
    touch_airport(to, dest_state, dest_city, row);

    std::string id = std::to_string(r);
    id = "F" + std::string(width - id.size(), '0') + id;
    Edge e{id, from, to, {}};
    if (!row[*carrier].empty()) {
      e.attrs.emplace("carrier", AttrValue::categorical(row[*carrier]));
    }
    if (delay && !row[*delay].empty()) {
      e.attrs.emplace("dep_delay", AttrValue::quantity(
                                       parse_number(row[*delay], where), "min"));
    }
    if (dep_time && !row[*dep_time].empty()) {
      e.attrs.emplace("dep_time", AttrValue::quantity(
                                      parse_number(row[*dep_time], where)));
    }
    if (date && !row[*date].empty()) {
      e.attrs.emplace("date", AttrValue::categorical(row[*date]));
    }
    if (flight && !row[*flight].empty()) {
      e.attrs.emplace("flight", AttrValue::categorical(row[*flight]));
    }
    edges.push_back(std::move(e));
  }

  if (!airports_csv.empty()) {
    std::vector<CsvRow> arows = parse_csv(airports_csv);
    if (arows.empty()) throw DataError("airports: missing header");
    auto code = find_column(arows.front(), {"code", "iata", "iata_code"});
    auto lat = find_column(arows.front(), {"lat", "latitude"});
    auto lon = find_column(arows.front(), {"lon", "long", "longitude"});
    if (!code || !lat || !lon) {
      throw DataError("airports: code, lat and lon columns are required");
    }
    schema.node_attrs.emplace("loc", AttrKind::kGeo);
    for (std::size_t r = 1; r < arows.size(); ++r) {
      const CsvRow& row = arows[r];
      std::string where = "airports row " + std::to_string(r + 1);
      if (row.size() < arows.front().size()) {
        throw DataError(where + ": too few fields");
      }
      auto it = airports.find(row[*code]);
      if (it == airports.end()) continue;
      it->second.attrs.insert_or_assign(
          "loc", AttrValue::geo(parse_number(row[*lat], where),
                                parse_number(row[*lon], where)));
    }
  }

  std::vector<Node> nodes;
  nodes.reserve(airports.size());
  for (auto& [code, node] : airports) nodes.push_back(std::move(node));
  return Graph::build(std::move(nodes), std::move(edges), std::move(schema));
}

Graph load_flights(const std::filesystem::path& flights_file,
                   const std::filesystem::path& airports_file) {
  return parse_flights(read_file(flights_file),
                       airports_file.empty() ? std::string()
                                             : read_file(airports_file));
}

Graph make_g0() {
  GraphSchema schema;
  schema.node_attrs.emplace("region", AttrKind::kCategorical);
  auto node = [](std::string id, std::string region) {
    return Node{std::move(id),
                {{"region", AttrValue::categorical(std::move(region))}}};
  };
  std::vector<Node> nodes = {node("A", "west"), node("B", "west"),
                             node("C", "west"), node("D", "mid"),
                             node("E", "mid"),  node("F", "east"),
                             node("G", "east")};
  std::vector<Edge> edges = {
      {"e1", "A", "D", {}}, {"e2", "B", "D", {}}, {"e3", "B", "F", {}},
      {"e4", "C", "E", {}}, {"e5", "D", "F", {}}, {"e6", "D", "G", {}},
      {"e7", "E", "G", {}}};
  return Graph::build(std::move(nodes), std::move(edges), std::move(schema));
}

}  // namespace connview
