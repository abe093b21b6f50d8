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

#ifndef CONNVIEW_METRIC_H_
#define CONNVIEW_METRIC_H_

#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "connview/enumerate.h"
#include "connview/query.h"

namespace connview {

/// Sorted, duplicate-free indices into QueryResult::paths.
using PathIds = std::vector<std::uint32_t>;

/// Value of a metric on one path set. Every metric yields kUndefined for the
/// empty set so that "no paths" stays distinguishable from a zero value.
struct MetricResult {
  enum class Kind { kUndefined, kScalar, kVector };

  Kind kind = Kind::kUndefined;
  double value = 0;
  std::vector<double> values;

  static MetricResult undefined() { return {}; }
  static MetricResult scalar(double v) { return {Kind::kScalar, v, {}}; }
  static MetricResult vector(std::vector<double> v) {
    return {Kind::kVector, 0, std::move(v)};
  }

  bool defined() const { return kind != Kind::kUndefined; }
  /// Scalar value, `fallback` when undefined. Vectors reduce to their sum.
  double scalar_or(double fallback) const;

  bool operator==(const MetricResult&) const = default;
};

using CustomMetricFn = std::function<MetricResult(
    const QueryResult&, std::span<const std::uint32_t> path_ids)>;

struct Metric {
  enum class Kind { kCount, kMinLength, kPerLengthCount, kAttrFraction, kCustom };

  Kind kind = Kind::kCount;
  Constraint predicate;  // kAttrFraction, edge subject
  std::string name;      // kCustom
  CustomMetricFn fn;     // kCustom

  static Metric count();
  static Metric min_length();
  /// Vector indexed by length 1..max_len of the query.
  static Metric per_length_count();
  /// Fraction of paths with at least one edge satisfying `predicate`.
  static Metric attr_fraction(Constraint predicate);
  static Metric custom(std::string name, CustomMetricFn fn);

  /// Textual form accepted by parse_metric.
  std::string describe() const;
};

/// Named custom metrics, looked up by parse_metric.
class MetricRegistry {
 public:
  void add(std::string name, CustomMetricFn fn);
  const CustomMetricFn* find(std::string_view name) const;

 private:
  std::map<std::string, CustomMetricFn, std::less<>> metrics_;
};

/// Parses a metric expression:
///   count | min_length | per_length | fraction(edge.ATTR OP LITERAL)
///   | custom:NAME
/// Throws ParseError for malformed text and NotFoundError for an unknown
/// custom name.
Metric parse_metric(std::string_view text,
                    const MetricRegistry* registry = nullptr);

/// Throws SemanticError when the metric refers to unknown attributes or
/// uses a comparator the attribute kind does not support.
void validate_metric(const Graph& graph, const Metric& metric);

MetricResult evaluate_metric(const Metric& metric, const QueryResult& result,
                             std::span<const std::uint32_t> path_ids);

}  // namespace connview

#endif  // CONNVIEW_METRIC_H_
