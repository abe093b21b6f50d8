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

#include "connview/query.h"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "connview/error.h"

namespace connview {

std::string_view to_string(Comparator cmp) {
  switch (cmp) {
    case Comparator::kEq:
      return "=";
    case Comparator::kNe:
      return "!=";
    case Comparator::kLt:
      return "<";
    case Comparator::kLe:
      return "<=";
    case Comparator::kGt:
      return ">";
    case Comparator::kGe:
      return ">=";
    case Comparator::kIn:
      return "IN";
  }
  return "?";
}

NodeSelector NodeSelector::node_ids(std::vector<std::string> ids) {
  NodeSelector s;
  s.kind = Kind::kIds;
  s.ids = std::move(ids);
  return s;
}

NodeSelector NodeSelector::equals(std::string attribute, Literal value) {
  NodeSelector s;
  s.kind = Kind::kAttrEquals;
  s.attribute = std::move(attribute);
  s.values.push_back(std::move(value));
  return s;
}

NodeSelector NodeSelector::in(std::string attribute,
                              std::vector<Literal> values) {
  NodeSelector s;
  s.kind = Kind::kAttrIn;
  s.attribute = std::move(attribute);
  s.values = std::move(values);
  return s;
}

namespace {

// ---------------------------------------------------------------------------
// Lexer

enum class TokenType { kIdent, kString, kNumber, kSymbol, kEnd };

struct Token {
  TokenType type = TokenType::kEnd;
  std::string text;
  double number = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> tokenize() {
    std::vector<Token> tokens;
    for (;;) {
      skip_space();
      Token tok;
      tok.line = line_;
      tok.column = column_;
      if (pos_ >= text_.size()) {
        tokens.push_back(tok);
        return tokens;
      }
      char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        tok.type = TokenType::kIdent;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_')) {
          tok.text += advance();
        }
      } else if (c == '"' || c == '\'') {
        tok.type = TokenType::kString;
        tok.text = read_string(tok);
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 (c == '-' && pos_ + 1 < text_.size() &&
                  std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
        tok.type = TokenType::kNumber;
        read_number(tok);
      } else {
        tok.type = TokenType::kSymbol;
        std::string_view rest = text_.substr(pos_);
        for (std::string_view sym : {"<=", ">=", "!="}) {
          if (rest.starts_with(sym)) {
            tok.text = sym;
            advance();
            advance();
            break;
          }
        }
        if (tok.text.empty()) {
          if (std::string_view("=<>(),.").find(c) == std::string_view::npos) {
            throw ParseError(std::string("unexpected character '") + c + "'",
                             line_, column_);
          }
          tok.text = std::string(1, advance());
        }
      }
      tokens.push_back(std::move(tok));
    }
  }

 private:
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      advance();
    }
  }

  std::string read_string(const Token& tok) {
    char quote = advance();
    std::string out;
    while (pos_ < text_.size()) {
      char c = advance();
      if (c == quote) return out;
      if (c == '\\') {
        if (pos_ >= text_.size()) break;
        char esc = advance();
        switch (esc) {
          case 'n':
            out += '\n';
            break;
          case 't':
            out += '\t';
            break;
          default:
            out += esc;
        }
        continue;
      }
      out += c;
    }
    throw ParseError("unterminated string literal", tok.line, tok.column);
  }

  void read_number(Token& tok) {
    std::size_t begin = pos_;
    if (text_[pos_] == '-') advance();
    auto digits = [&] {
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        advance();
      }
    };
    digits();
    if (pos_ + 1 < text_.size() && text_[pos_] == '.' &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      advance();
      digits();
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t save = pos_;
      std::size_t save_col = column_;
      advance();
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
        advance();
      }
      if (pos_ < text_.size() &&
          std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        digits();
      } else {
        pos_ = save;
        column_ = save_col;
      }
    }
    tok.text = std::string(text_.substr(begin, pos_ - begin));
    auto [ptr, ec] = std::from_chars(tok.text.data(),
                                     tok.text.data() + tok.text.size(),
                                     tok.number);
    if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
      throw ParseError("malformed number '" + tok.text + "'", tok.line,
                       tok.column);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Lexer(text).tokenize()) {}

  PathQuery parse_query() {
    PathQuery q;
    expect_keyword("PATHS");
    expect_keyword("LENGTH");
    if (accept_symbol("<=")) {
      q.len_mode = LengthMode::kAtMost;
    } else if (accept_symbol("=")) {
      q.len_mode = LengthMode::kExactly;
    } else {
      fail("expected '<=' or '='");
    }
    q.max_len = parse_length();
    expect_keyword("FROM");
    q.start = parse_selector();
    expect_keyword("TO");
    q.end = parse_selector();
    if (accept_keyword("MODE")) {
      if (accept_keyword("SIMPLE")) {
        q.path_mode = PathMode::kSimple;
      } else if (accept_keyword("WALK")) {
        q.path_mode = PathMode::kWalk;
      } else {
        fail("expected 'SIMPLE' or 'WALK'");
      }
    }
    if (accept_keyword("WHERE")) {
      do {
        q.constraints.push_back(parse_cond());
      } while (accept_keyword("AND"));
    }
    expect_end();
    return q;
  }

  Constraint parse_single_condition() {
    Constraint c = parse_cond();
    expect_end();
    return c;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = peek();
    std::string found = t.type == TokenType::kEnd
                            ? "end of input"
                            : "'" + t.text + "'";
    throw ParseError(message + ", found " + found, t.line, t.column);
  }

  bool accept_keyword(std::string_view kw) {
    if (peek().type == TokenType::kIdent && peek().text == kw) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_keyword(std::string_view kw) {
    if (!accept_keyword(kw)) fail("expected '" + std::string(kw) + "'");
  }

  bool accept_symbol(std::string_view sym) {
    if (peek().type == TokenType::kSymbol && peek().text == sym) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_symbol(std::string_view sym) {
    if (!accept_symbol(sym)) fail("expected '" + std::string(sym) + "'");
  }

  void expect_end() {
    if (peek().type != TokenType::kEnd) fail("expected end of query");
  }

  std::size_t parse_length() {
    const Token& t = peek();
    if (t.type != TokenType::kNumber ||
        t.text.find_first_not_of("0123456789") != std::string::npos) {
      fail("expected a positive integer length");
    }
    if (t.number < 1) fail("maximum length must be at least 1");
    ++pos_;
    return static_cast<std::size_t>(t.number);
  }

  std::string parse_ident(const char* what) {
    if (peek().type != TokenType::kIdent) {
      fail(std::string("expected ") + what);
    }
    return tokens_[pos_++].text;
  }

  Literal parse_literal() {
    const Token& t = peek();
    if (t.type == TokenType::kString) {
      ++pos_;
      return t.text;
    }
    if (t.type == TokenType::kNumber) {
      ++pos_;
      return t.number;
    }
    fail("expected a string or number literal");
  }

  std::vector<Literal> parse_literal_list() {
    expect_symbol("(");
    std::vector<Literal> values{parse_literal()};
    while (accept_symbol(",")) values.push_back(parse_literal());
    expect_symbol(")");
    return values;
  }

  NodeSelector parse_selector() {
    if (accept_keyword("NODES")) {
      expect_symbol("(");
      std::vector<std::string> ids;
      do {
        if (peek().type != TokenType::kString) fail("expected a node id string");
        ids.push_back(tokens_[pos_++].text);
      } while (accept_symbol(","));
      expect_symbol(")");
      return NodeSelector::node_ids(std::move(ids));
    }
    std::string attr = parse_ident("'NODES' or an attribute name");
    if (accept_symbol("=")) return NodeSelector::equals(attr, parse_literal());
    if (accept_keyword("IN")) {
      return NodeSelector::in(attr, parse_literal_list());
    }
    fail("expected '=' or 'IN'");
  }

  Constraint parse_cond() {
    Constraint c;
    if (accept_keyword("edge")) {
      c.subject = Subject::kEdge;
    } else if (accept_keyword("intermediate")) {
      c.subject = Subject::kIntermediate;
    } else if (accept_keyword("node")) {
      c.subject = Subject::kAnyNode;
    } else {
      fail("expected 'edge', 'intermediate' or 'node'");
    }
    expect_symbol(".");
    c.attribute = parse_ident("an attribute name");
    if (accept_keyword("IN")) {
      c.comparator = Comparator::kIn;
      c.values = parse_literal_list();
      return c;
    }
    static constexpr std::pair<std::string_view, Comparator> kOps[] = {
        {"=", Comparator::kEq},  {"!=", Comparator::kNe},
        {"<", Comparator::kLt},  {"<=", Comparator::kLe},
        {">", Comparator::kGt},  {">=", Comparator::kGe}};
    for (auto [sym, cmp] : kOps) {
      if (accept_symbol(sym)) {
        c.comparator = cmp;
        c.values.push_back(parse_literal());
        return c;
      }
    }
    fail("expected a comparator");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string literal_to_dsl(const Literal& lit) {
  if (const auto* s = std::get_if<std::string>(&lit)) {
    std::string out = "\"";
    for (char c : *s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  }
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, std::get<double>(lit));
  return std::string(buf, ptr);
}

std::string list_to_dsl(const std::vector<Literal>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += literal_to_dsl(values[i]);
  }
  return out + ")";
}

std::string selector_to_dsl(const NodeSelector& s) {
  switch (s.kind) {
    case NodeSelector::Kind::kIds: {
      std::vector<Literal> ids(s.ids.begin(), s.ids.end());
      return "NODES" + list_to_dsl(ids);
    }
    case NodeSelector::Kind::kAttrEquals:
      return s.attribute + " = " + literal_to_dsl(s.values.front());
    case NodeSelector::Kind::kAttrIn:
      return s.attribute + " IN " + list_to_dsl(s.values);
  }
  return {};
}

std::string_view subject_name(Subject s) {
  switch (s) {
    case Subject::kEdge:
      return "edge";
    case Subject::kIntermediate:
      return "intermediate";
    case Subject::kAnyNode:
      return "node";
  }
  return "?";
}

bool literals_fit(AttrKind kind, const std::vector<Literal>& values) {
  return std::all_of(values.begin(), values.end(), [&](const Literal& v) {
    return kind == AttrKind::kCategorical
               ? std::holds_alternative<std::string>(v)
               : std::holds_alternative<double>(v);
  });
}

void check_kind(std::string_view what, AttrKind kind, Comparator cmp,
                const std::vector<Literal>& values) {
  std::string where(what);
  if (kind == AttrKind::kGeo) {
    throw SemanticError(where + " is a geo attribute and cannot be compared");
  }
  bool ordering = cmp == Comparator::kLt || cmp == Comparator::kLe ||
                  cmp == Comparator::kGt || cmp == Comparator::kGe;
  if (ordering && kind != AttrKind::kQuantitative) {
    throw SemanticError("comparator '" + std::string(to_string(cmp)) +
                        "' requires a quantitative attribute, but " + where +
                        " is " + std::string(to_string(kind)));
  }
  if (!literals_fit(kind, values)) {
    throw SemanticError(where + " is " + std::string(to_string(kind)) +
                        (kind == AttrKind::kCategorical
                             ? " and needs string literals"
                             : " and needs numeric literals"));
  }
}

void validate_selector(const Graph& graph, const NodeSelector& s,
                       std::string_view role) {
  if (s.kind == NodeSelector::Kind::kIds) {
    if (s.ids.empty()) {
      throw SemanticError(std::string(role) + " node list is empty");
    }
    for (const std::string& id : s.ids) {
      if (!graph.find_node(id)) {
        throw SemanticError("unknown node '" + id + "' in " +
                            std::string(role) + " selector");
      }
    }
    return;
  }
  auto it = graph.schema().node_attrs.find(s.attribute);
  if (it == graph.schema().node_attrs.end()) {
    throw SemanticError("unknown node attribute '" + s.attribute + "' in " +
                        std::string(role) + " selector");
  }
  if (s.values.empty()) {
    throw SemanticError(std::string(role) + " selector has no values");
  }
  check_kind("node attribute '" + s.attribute + "'", it->second,
             s.kind == NodeSelector::Kind::kAttrIn ? Comparator::kIn
                                                   : Comparator::kEq,
             s.values);
}

bool compare_number(double lhs, Comparator cmp, double rhs) {
  switch (cmp) {
    case Comparator::kEq:
    case Comparator::kIn:
      return lhs == rhs;
    case Comparator::kNe:
      return lhs != rhs;
    case Comparator::kLt:
      return lhs < rhs;
    case Comparator::kLe:
      return lhs <= rhs;
    case Comparator::kGt:
      return lhs > rhs;
    case Comparator::kGe:
      return lhs >= rhs;
  }
  return false;
}

bool compare_literals(const Literal& actual, Comparator cmp,
                      const std::vector<Literal>& literals) {
  auto one = [&](const Literal& lit) {
    if (actual.index() != lit.index()) return false;
    if (const auto* s = std::get_if<std::string>(&actual)) {
      const std::string& rhs = std::get<std::string>(lit);
      switch (cmp) {
        case Comparator::kEq:
        case Comparator::kIn:
          return *s == rhs;
        case Comparator::kNe:
          return *s != rhs;
        default:
          return false;
      }
    }
    return compare_number(std::get<double>(actual), cmp, std::get<double>(lit));
  };
  if (cmp == Comparator::kIn) {
    return std::any_of(literals.begin(), literals.end(), one);
  }
  return !literals.empty() && one(literals.front());
}

}  // namespace

PathQuery parse_query(std::string_view text) {
  return Parser(text).parse_query();
}

Constraint parse_condition(std::string_view text) {
  return Parser(text).parse_single_condition();
}

std::string to_dsl(const PathQuery& q) {
  std::string out = "PATHS LENGTH ";
  out += q.len_mode == LengthMode::kAtMost ? "<= " : "= ";
  out += std::to_string(q.max_len);
  out += " FROM " + selector_to_dsl(q.start);
  out += " TO " + selector_to_dsl(q.end);
  out += q.path_mode == PathMode::kSimple ? " MODE SIMPLE" : " MODE WALK";
  for (std::size_t i = 0; i < q.constraints.size(); ++i) {
    const Constraint& c = q.constraints[i];
    out += i == 0 ? " WHERE " : " AND ";
    out += std::string(subject_name(c.subject)) + "." + c.attribute;
    if (c.comparator == Comparator::kIn) {
      out += " IN " + list_to_dsl(c.values);
    } else {
      out += " " + std::string(to_string(c.comparator)) + " " +
             literal_to_dsl(c.values.front());
    }
  }
  return out;
}

void validate_constraint(const Graph& graph, const Constraint& c) {
  if (c.values.empty() ||
      (c.comparator != Comparator::kIn && c.values.size() != 1)) {
    throw SemanticError("constraint on '" + c.attribute +
                        "' has the wrong number of values");
  }
  std::string what = std::string(subject_name(c.subject)) + "." + c.attribute;
  if (c.subject != Subject::kEdge && c.attribute == kDegreeAttribute) {
    check_kind(what, AttrKind::kQuantitative, c.comparator, c.values);
    return;
  }
  const AttrSchema& schema = c.subject == Subject::kEdge
                                 ? graph.schema().edge_attrs
                                 : graph.schema().node_attrs;
  auto it = schema.find(c.attribute);
  if (it == schema.end()) {
    throw SemanticError("unknown " +
                        std::string(c.subject == Subject::kEdge ? "edge"
                                                                : "node") +
                        " attribute '" + c.attribute + "'");
  }
  check_kind(what, it->second, c.comparator, c.values);
}

void validate_query(const Graph& graph, const PathQuery& q) {
  if (q.max_len < 1) throw SemanticError("maximum length must be at least 1");
  if (q.result_cap < 1) throw SemanticError("result cap must be at least 1");
  validate_selector(graph, q.start, "start");
  validate_selector(graph, q.end, "end");
  for (const Constraint& c : q.constraints) validate_constraint(graph, c);
}

bool compare_value(const AttrValue* value, Comparator cmp,
                   const std::vector<Literal>& literals) {
  if (value == nullptr) return false;
  switch (value->kind()) {
    case AttrKind::kCategorical:
      return compare_literals(Literal(value->text()), cmp, literals);
    case AttrKind::kQuantitative:
      return compare_literals(Literal(value->number()), cmp, literals);
    case AttrKind::kGeo:
      return false;
  }
  return false;
}

bool node_matches(const Graph& graph, NodeIndex node, const Constraint& c) {
  if (c.attribute == kDegreeAttribute) {
    return compare_literals(Literal(static_cast<double>(graph.degree(node))),
                            c.comparator, c.values);
  }
  return compare_value(graph.node_attr(node, c.attribute), c.comparator,
                       c.values);
}

bool edge_matches(const Graph& graph, EdgeIndex edge, const Constraint& c) {
  return compare_value(graph.edge_attr(edge, c.attribute), c.comparator,
                       c.values);
}

}  // namespace connview
