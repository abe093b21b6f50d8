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

#include "connview/attr.h"

#include <cmath>

#include "connview/error.h"

namespace connview {

std::string_view to_string(AttrKind kind) {
  switch (kind) {
    case AttrKind::kCategorical:
      return "categorical";
    case AttrKind::kQuantitative:
      return "quantitative";
    case AttrKind::kGeo:
      return "geo";
  }
  return "unknown";
}

std::optional<AttrKind> parse_attr_kind(std::string_view name) {
  if (name == "categorical") return AttrKind::kCategorical;
  if (name == "quantitative") return AttrKind::kQuantitative;
  if (name == "geo") return AttrKind::kGeo;
  return std::nullopt;
}

AttrValue AttrValue::categorical(std::string text) {
  return AttrValue(std::move(text));
}

AttrValue AttrValue::quantity(double value, std::string unit) {
  if (!std::isfinite(value)) {
    throw DataError("quantity must be finite");
  }
  return AttrValue(Quantity{value, std::move(unit)});
}

AttrValue AttrValue::geo(double lat, double lon) {
  if (!(lat >= -90.0 && lat <= 90.0) || !(lon >= -180.0 && lon <= 180.0)) {
    throw DataError("geo coordinate out of range: (" + std::to_string(lat) +
                    ", " + std::to_string(lon) + ")");
  }
  return AttrValue(GeoPoint{lat, lon});
}

AttrKind AttrValue::kind() const {
  switch (value_.index()) {
    case 0:
      return AttrKind::kCategorical;
    case 1:
      return AttrKind::kQuantitative;
    default:
      return AttrKind::kGeo;
  }
}

const std::string& AttrValue::text() const {
  return std::get<std::string>(value_);
}

double AttrValue::number() const { return std::get<Quantity>(value_).value; }

const std::string& AttrValue::unit() const {
  return std::get<Quantity>(value_).unit;
}

GeoPoint AttrValue::point() const { return std::get<GeoPoint>(value_); }

}  // namespace connview
