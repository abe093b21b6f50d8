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

#ifndef CONNVIEW_ATTR_H_
#define CONNVIEW_ATTR_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace connview {

enum class AttrKind { kCategorical, kQuantitative, kGeo };

std::string_view to_string(AttrKind kind);
/// Accepts "categorical", "quantitative" and "geo".
std::optional<AttrKind> parse_attr_kind(std::string_view name);

struct GeoPoint {
  double lat = 0;
  double lon = 0;
  bool operator==(const GeoPoint&) const = default;
};

/// A typed node or edge attribute value. Construction validates the value:
/// quantities are finite, geo points lie within [-90,90] x [-180,180].
class AttrValue {
 public:
  static AttrValue categorical(std::string text);
  static AttrValue quantity(double value, std::string unit = {});
  static AttrValue geo(double lat, double lon);

  AttrKind kind() const;

  const std::string& text() const;  // categorical only
  double number() const;            // quantitative only
  const std::string& unit() const;  // quantitative only
  GeoPoint point() const;           // geo only

  bool operator==(const AttrValue& other) const = default;

 private:
  struct Quantity {
    double value;
    std::string unit;
    bool operator==(const Quantity&) const = default;
  };

  explicit AttrValue(std::variant<std::string, Quantity, GeoPoint> v)
      : value_(std::move(v)) {}

  std::variant<std::string, Quantity, GeoPoint> value_;
};

using AttrMap = std::map<std::string, AttrValue, std::less<>>;
using AttrSchema = std::map<std::string, AttrKind, std::less<>>;

/// Attribute names and kinds, kept separately for nodes and edges.
struct GraphSchema {
  AttrSchema node_attrs;
  AttrSchema edge_attrs;

  bool operator==(const GraphSchema&) const = default;
};

}  // namespace connview

#endif  // CONNVIEW_ATTR_H_
