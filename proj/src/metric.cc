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

#include "connview/metric.h"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "connview/error.h"

namespace connview {

double MetricResult::scalar_or(double fallback) const {
  switch (kind) {
    case Kind::kUndefined:
      return fallback;
    case Kind::kScalar:
      return value;
    case Kind::kVector:
      return std::accumulate(values.begin(), values.end(), 0.0);
  }
  return fallback;
}

Metric Metric::count() { return Metric{}; }

Metric Metric::min_length() {
  Metric m;
  m.kind = Kind::kMinLength;
  return m;
}

Metric Metric::per_length_count() {
  Metric m;
  m.kind = Kind::kPerLengthCount;
  return m;
}

Metric Metric::attr_fraction(Constraint predicate) {
  Metric m;
  m.kind = Kind::kAttrFraction;
  m.predicate = std::move(predicate);
  return m;
}

Metric Metric::custom(std::string name, CustomMetricFn fn) {
  Metric m;
  m.kind = Kind::kCustom;
  m.name = std::move(name);
  m.fn = std::move(fn);
  return m;
}

std::string Metric::describe() const {
  switch (kind) {
    case Kind::kCount:
      return "count";
    case Kind::kMinLength:
      return "min_length";
    case Kind::kPerLengthCount:
      return "per_length";
    case Kind::kAttrFraction: {
      PathQuery q;
      q.constraints.push_back(predicate);
      std::string dsl = to_dsl(q);
      return "fraction(" + dsl.substr(dsl.find(" WHERE ") + 7) + ")";
    }
    case Kind::kCustom:
      return "custom:" + name;
  }
  return "count";
}

void MetricRegistry::add(std::string name, CustomMetricFn fn) {
  metrics_.insert_or_assign(std::move(name), std::move(fn));
}

const CustomMetricFn* MetricRegistry::find(std::string_view name) const {
  auto it = metrics_.find(name);
  return it == metrics_.end() ? nullptr : &it->second;
}

Metric parse_metric(std::string_view text, const MetricRegistry* registry) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
      s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
      s.remove_suffix(1);
    }
    return s;
  };
  std::string_view t = trim(text);
  if (t == "count") return Metric::count();
  if (t == "min_length" || t == "min-length") return Metric::min_length();
  if (t == "per_length" || t == "per-length") return Metric::per_length_count();
  if (t.starts_with("fraction(") && t.ends_with(")")) {
    std::string_view inner = t.substr(9, t.size() - 10);
    Constraint c;
    try {
      c = parse_condition(inner);
    } catch (const ParseError& e) {
      // Report positions relative to the whole metric expression.
      throw ParseError(e.detail(), e.line(), e.column() + 9);
    }
    return Metric::attr_fraction(std::move(c));
  }
  if (t.starts_with("custom:")) {
    std::string name(t.substr(7));
    const CustomMetricFn* fn = registry ? registry->find(name) : nullptr;
    if (fn == nullptr) throw NotFoundError("unknown custom metric '" + name + "'");
    return Metric::custom(name, *fn);
  }
  throw ParseError("unknown metric '" + std::string(t) +
                       "' (expected count, min_length, per_length, "
                       "fraction(edge.ATTR OP VALUE) or custom:NAME)",
                   1, 1);
}

void validate_metric(const Graph& graph, const Metric& metric) {
  if (metric.kind == Metric::Kind::kAttrFraction) {
    if (metric.predicate.subject != Subject::kEdge) {
      throw SemanticError("fraction metrics take an edge predicate");
    }
    validate_constraint(graph, metric.predicate);
  }
  if (metric.kind == Metric::Kind::kCustom && !metric.fn) {
    throw SemanticError("custom metric '" + metric.name + "' has no function");
  }
}

MetricResult evaluate_metric(const Metric& metric, const QueryResult& result,
                             std::span<const std::uint32_t> path_ids) {
  if (path_ids.empty()) return MetricResult::undefined();
  if (metric.kind == Metric::Kind::kCustom) return metric.fn(result, path_ids);
  const std::vector<Path>& paths = result.paths;
  switch (metric.kind) {
    case Metric::Kind::kCount:
      return MetricResult::scalar(static_cast<double>(path_ids.size()));
    case Metric::Kind::kMinLength: {
      std::size_t shortest = paths[path_ids.front()].length();
      for (std::uint32_t id : path_ids) {
        shortest = std::min(shortest, paths[id].length());
      }
      return MetricResult::scalar(static_cast<double>(shortest));
    }
    case Metric::Kind::kPerLengthCount: {
      std::vector<double> counts(result.query.max_len, 0.0);
      for (std::uint32_t id : path_ids) counts[paths[id].length() - 1] += 1;
      return MetricResult::vector(std::move(counts));
    }
    case Metric::Kind::kAttrFraction: {
      const Graph& g = *result.graph;
      std::size_t hits = 0;
      for (std::uint32_t id : path_ids) {
        auto edges = paths[id].edges();
        if (std::any_of(edges.begin(), edges.end(), [&](EdgeIndex e) {
              return edge_matches(g, e, metric.predicate);
            })) {
          ++hits;
        }
      }
      return MetricResult::scalar(static_cast<double>(hits) /
                                  static_cast<double>(path_ids.size()));
    }
    case Metric::Kind::kCustom:
      break;
  }
  return MetricResult::undefined();
}

}  // namespace connview
