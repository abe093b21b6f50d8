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

#ifndef CONNVIEW_QUERY_H_
#define CONNVIEW_QUERY_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "connview/graph.h"

namespace connview {

/// A string or numeric literal of the query language.
using Literal = std::variant<std::string, double>;

enum class Comparator { kEq, kNe, kLt, kLe, kGt, kGe, kIn };

std::string_view to_string(Comparator cmp);

struct NodeSelector {
  enum class Kind { kIds, kAttrEquals, kAttrIn };

  Kind kind = Kind::kIds;
  std::vector<std::string> ids;  // kIds
  std::string attribute;         // kAttrEquals, kAttrIn
  std::vector<Literal> values;   // one value for kAttrEquals

  static NodeSelector node_ids(std::vector<std::string> ids);
  static NodeSelector equals(std::string attribute, Literal value);
  static NodeSelector in(std::string attribute, std::vector<Literal> values);

  bool operator==(const NodeSelector&) const = default;
};

enum class Subject { kEdge, kIntermediate, kAnyNode };

/// Predicate on an attribute of every edge, every interior node, or every
/// node of a path. "degree" on a node subject is the total degree in the
/// full graph.
struct Constraint {
  Subject subject = Subject::kEdge;
  std::string attribute;
  Comparator comparator = Comparator::kEq;
  std::vector<Literal> values;  // exactly one unless comparator is kIn

  bool operator==(const Constraint&) const = default;
};

enum class LengthMode { kAtMost, kExactly };
enum class PathMode { kSimple, kWalk };

inline constexpr std::size_t kDefaultResultCap = 1'000'000;

struct PathQuery {
  NodeSelector start;
  NodeSelector end;
  std::size_t max_len = 1;
  LengthMode len_mode = LengthMode::kAtMost;
  PathMode path_mode = PathMode::kSimple;
  std::vector<Constraint> constraints;
  std::size_t result_cap = kDefaultResultCap;

  bool operator==(const PathQuery&) const = default;
};

inline constexpr std::string_view kDegreeAttribute = "degree";

/// Parses the path query language:
///
///   query      := "PATHS" "LENGTH" ("<=" | "=") INT
///                 "FROM" selector "TO" selector
///                 ["MODE" ("SIMPLE" | "WALK")]
///                 ["WHERE" cond {"AND" cond}]
///   selector   := "NODES" "(" STRING {"," STRING} ")"
///               | IDENT "=" literal
///               | IDENT "IN" "(" literal {"," literal} ")"
///   cond       := ("edge" | "intermediate" | "node") "." IDENT
///                 (comparator literal | "IN" "(" literal {"," literal} ")")
///   comparator := "=" | "!=" | "<" | "<=" | ">" | ">="
///   literal    := STRING | NUMBER
///
/// Throws ParseError carrying the 1-based line and column of the offending
/// token. Attribute names are not checked here; see validate_query.
PathQuery parse_query(std::string_view text);

/// Canonical DSL text of a query. parse_query(to_dsl(q)) == q up to the
/// result cap, which has no textual form.
std::string to_dsl(const PathQuery& query);

/// Checks attribute names and comparator/kind compatibility against the
/// graph schema. Throws SemanticError.
void validate_query(const Graph& graph, const PathQuery& query);

/// Checks that the attribute exists for the subject and that the comparator and
/// the literals fit its kind. Throws SemanticError.
void validate_constraint(const Graph& graph, const Constraint& constraint);

/// Evaluates a validated constraint. Absent attributes never match.
bool node_matches(const Graph& graph, NodeIndex node,
                  const Constraint& constraint);
bool edge_matches(const Graph& graph, EdgeIndex edge,
                  const Constraint& constraint);

/// Compares one attribute value with literals. Returns false for an absent
/// value or a kind/literal type mismatch.
bool compare_value(const AttrValue* value, Comparator comparator,
                   const std::vector<Literal>& literals);

/// Parses "edge.attr OP literal" (also intermediate./node. subjects). Used
/// by metric expressions that reuse the condition syntax.
Constraint parse_condition(std::string_view text);

}  // namespace connview

#endif  // CONNVIEW_QUERY_H_
