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

#include "test_support.h"

#include <algorithm>
#include <cstdio>
#include <random>
#include <set>

#include "connview/ingestion.h"

namespace connview::testing {

namespace {

std::string padded(char prefix, std::size_t i, int width) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%c%0*zu", prefix, width, i);
  return buf;
}

const Node* raw_node(const Graph& g, const std::string& id) {
  for (const Node& n : g.nodes()) {
    if (n.id == id) return &n;
  }
  return nullptr;
}

const Edge* raw_edge(const Graph& g, const std::string& id) {
  for (const Edge& e : g.edges()) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

std::size_t raw_degree(const Graph& g, const std::string& id) {
  std::size_t d = 0;
  for (const Edge& e : g.edges()) {
    d += (e.source == id) + (e.target == id);
  }
  return d;
}

bool literal_holds(const AttrValue& v, Comparator cmp, const Literal& lit) {
  if (v.kind() == AttrKind::kCategorical) {
    const auto* s = std::get_if<std::string>(&lit);
    if (s == nullptr) return false;
    switch (cmp) {
      case Comparator::kEq:
      case Comparator::kIn:
        return v.text() == *s;
      case Comparator::kNe:
        return v.text() != *s;
      default:
        return false;
    }
  }
  if (v.kind() != AttrKind::kQuantitative) return false;
  const auto* d = std::get_if<double>(&lit);
  if (d == nullptr) return false;
  double x = v.number();
  switch (cmp) {
    case Comparator::kEq:
    case Comparator::kIn:
      return x == *d;
    case Comparator::kNe:
      return x != *d;
    case Comparator::kLt:
      return x < *d;
    case Comparator::kLe:
      return x <= *d;
    case Comparator::kGt:
      return x > *d;
    case Comparator::kGe:
      return x >= *d;
  }
  return false;
}

bool value_holds(const AttrValue* v, const Constraint& c) {
  if (v == nullptr) return false;
  if (c.comparator == Comparator::kIn) {
    return std::any_of(c.values.begin(), c.values.end(), [&](const Literal& l) {
      return literal_holds(*v, Comparator::kIn, l);
    });
  }
  return literal_holds(*v, c.comparator, c.values.at(0));
}

bool node_holds(const Graph& g, const std::string& id, const Constraint& c) {
  if (c.attribute == "degree") {
    AttrValue deg = AttrValue::quantity(static_cast<double>(raw_degree(g, id)));
    return value_holds(&deg, c);
  }
  const Node* n = raw_node(g, id);
  auto it = n->attrs.find(c.attribute);
  return value_holds(it == n->attrs.end() ? nullptr : &it->second, c);
}

bool edge_holds(const Edge& e, const Constraint& c) {
  auto it = e.attrs.find(c.attribute);
  return value_holds(it == e.attrs.end() ? nullptr : &it->second, c);
}

struct Dfs {
  const Graph& g;
  const PathQuery& q;
  std::set<std::string> ends;
  std::vector<IdPath> out;
  IdPath edges;
  std::vector<std::string> nodes;

  bool node_ok_interior(const std::string& id) const {
    for (const Constraint& c : q.constraints) {
      if (c.subject == Subject::kIntermediate && !node_holds(g, id, c)) {
        return false;
      }
    }
    return true;
  }
  bool node_ok_any(const std::string& id) const {
    for (const Constraint& c : q.constraints) {
      if (c.subject == Subject::kAnyNode && !node_holds(g, id, c)) return false;
    }
    return true;
  }
  bool edge_ok(const Edge& e) const {
    for (const Constraint& c : q.constraints) {
      if (c.subject == Subject::kEdge && !edge_holds(e, c)) return false;
    }
    return true;
  }

  void visit() {
    const std::string here = nodes.back();
    std::size_t len = edges.size();
    if (len >= 1 && ends.count(here) &&
        (q.len_mode == LengthMode::kAtMost || len == q.max_len)) {
      out.push_back(edges);
    }
    if (len == q.max_len) return;
    // Extending makes `here` interior (unless it is the start).
    if (len >= 1 && !node_ok_interior(here)) return;
    for (const Edge& e : g.edges()) {
      if (e.source != here || !edge_ok(e) || !node_ok_any(e.target)) continue;
      if (q.path_mode == PathMode::kSimple &&
          std::find(nodes.begin(), nodes.end(), e.target) != nodes.end()) {
        continue;
      }
      edges.push_back(e.id);
      nodes.push_back(e.target);
      visit();
      edges.pop_back();
      nodes.pop_back();
    }
  }
};

}  // namespace

Graph random_graph(std::uint64_t seed, const RandomGraphSpec& spec) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const char* colors[] = {"red", "green", "blue"};
  const char* kinds[] = {"x", "y"};
  const char* carriers[] = {"AA", "UA", "DL"};

  GraphSchema schema;
  schema.node_attrs = {{"color", AttrKind::kCategorical},
                       {"kind", AttrKind::kCategorical},
                       {"size", AttrKind::kQuantitative}};
  schema.edge_attrs = {{"carrier", AttrKind::kCategorical},
                       {"delay", AttrKind::kQuantitative}};

  std::vector<Node> nodes;
  for (std::size_t i = 0; i < spec.nodes; ++i) {
    Node n{padded('n', i, 2), {}};
    if (unit(rng) >= spec.missing_probability) {
      n.attrs.emplace("color", AttrValue::categorical(colors[rng() % 3]));
    }
    if (unit(rng) >= spec.missing_probability) {
      n.attrs.emplace("kind", AttrValue::categorical(kinds[rng() % 2]));
    }
    n.attrs.emplace("size", AttrValue::quantity(static_cast<double>(rng() % 10)));
    nodes.push_back(std::move(n));
  }
  std::vector<Edge> edges;
  auto add_edge = [&](std::size_t u, std::size_t v) {
    Edge e{padded('e', edges.size(), 4), nodes[u].id, nodes[v].id, {}};
    e.attrs.emplace("carrier", AttrValue::categorical(carriers[rng() % 3]));
    e.attrs.emplace("delay", AttrValue::quantity(static_cast<double>(rng() % 60)));
    edges.push_back(std::move(e));
  };
  for (std::size_t u = 0; u < spec.nodes; ++u) {
    for (std::size_t v = 0; v < spec.nodes; ++v) {
      if (u == v && !spec.self_loops) continue;
      if (unit(rng) < spec.edge_probability) {
        add_edge(u, v);
        if (unit(rng) < spec.parallel_probability) add_edge(u, v);
      }
    }
  }
  return Graph::build(std::move(nodes), std::move(edges), std::move(schema));
}

std::vector<std::string> oracle_select(const Graph& g,
                                       const NodeSelector& selector) {
  std::vector<std::string> out;
  for (const Node& n : g.nodes()) {
    bool match = false;
    if (selector.kind == NodeSelector::Kind::kIds) {
      match = std::find(selector.ids.begin(), selector.ids.end(), n.id) !=
              selector.ids.end();
    } else {
      auto it = n.attrs.find(selector.attribute);
      if (it != n.attrs.end()) {
        for (const Literal& l : selector.values) {
          match = match || literal_holds(it->second, Comparator::kEq, l);
        }
      }
    }
    if (match) out.push_back(n.id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IdPath> oracle_paths(const Graph& g, const PathQuery& q) {
  Dfs dfs{g, q, {}, {}, {}, {}};
  for (const std::string& id : oracle_select(g, q.end)) dfs.ends.insert(id);
  for (const std::string& s : oracle_select(g, q.start)) {
    if (!dfs.node_ok_any(s)) continue;
    dfs.nodes = {s};
    dfs.visit();
  }
  auto key = [&](const IdPath& p) {
    auto nodes = oracle_nodes(g, p);
    return std::make_tuple(nodes.front(), nodes.back(), p.size(), p);
  };
  std::sort(dfs.out.begin(), dfs.out.end(),
            [&](const IdPath& a, const IdPath& b) { return key(a) < key(b); });
  return dfs.out;
}

std::vector<IdPath> to_id_paths(const QueryResult& result) {
  std::vector<IdPath> out;
  for (const Path& p : result.paths) {
    IdPath ids;
    for (EdgeIndex e : p.edges()) ids.push_back(result.graph->edge(e).id);
    out.push_back(std::move(ids));
  }
  return out;
}

std::vector<std::string> oracle_nodes(const Graph& g, const IdPath& path) {
  std::vector<std::string> nodes;
  for (const std::string& id : path) {
    const Edge* e = raw_edge(g, id);
    if (nodes.empty()) nodes.push_back(e->source);
    nodes.push_back(e->target);
  }
  return nodes;
}

std::map<std::pair<std::string, std::string>, std::size_t> oracle_matrix(
    const Graph& g, const std::vector<IdPath>& paths) {
  std::map<std::pair<std::string, std::string>, std::size_t> out;
  for (const IdPath& p : paths) {
    auto nodes = oracle_nodes(g, p);
    ++out[{nodes.front(), nodes.back()}];
  }
  return out;
}

std::map<std::pair<std::string, std::string>, std::size_t> oracle_table(
    const Graph& g, const std::vector<IdPath>& paths) {
  std::map<std::pair<std::string, std::string>, std::size_t> out;
  for (const IdPath& p : paths) {
    auto nodes = oracle_nodes(g, p);
    for (std::size_t j = 1; j + 1 < nodes.size(); ++j) {
      std::string col =
          "(" + std::to_string(j) + "," + std::to_string(p.size()) + ")";
      ++out[{nodes[j], col}];
    }
  }
  return out;
}

std::vector<std::vector<std::uint64_t>> adjacency_power(const Graph& g,
                                                        std::size_t l) {
  std::vector<std::string> ids;
  for (const Node& n : g.nodes()) ids.push_back(n.id);
  std::sort(ids.begin(), ids.end());
  std::size_t n = ids.size();
  auto pos = [&](const std::string& id) {
    return static_cast<std::size_t>(
        std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };
  std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(n, 0));
  for (const Edge& e : g.edges()) ++a[pos(e.source)][pos(e.target)];
  auto result = a;
  for (std::size_t step = 1; step < l; ++step) {
    std::vector<std::vector<std::uint64_t>> next(
        n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) {
          next[i][j] += result[i][k] * a[k][j];
        }
      }
    }
    result = std::move(next);
  }
  return result;
}

bool valid_id_path(const Graph& g, const IdPath& path) {
  if (path.empty()) return false;
  const Edge* prev = nullptr;
  for (const std::string& id : path) {
    const Edge* e = raw_edge(g, id);
    if (e == nullptr) return false;
    if (prev != nullptr && prev->target != e->source) return false;
    prev = e;
  }
  return true;
}

std::shared_ptr<const Graph> shared_g0() {
  return std::make_shared<const Graph>(make_g0());
}

}  // namespace connview::testing
