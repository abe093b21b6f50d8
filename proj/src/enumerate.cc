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

#include "connview/enumerate.h"

#include <algorithm>
#include <atomic>
#include <deque>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "connview/error.h"

namespace connview {

std::size_t QueryResult::max_length() const {
  std::size_t longest = 0;
  for (const Path& p : paths) longest = std::max(longest, p.length());
  return longest;
}

std::map<std::size_t, std::size_t> QueryResult::length_histogram() const {
  std::map<std::size_t, std::size_t> histogram;
  for (const Path& p : paths) ++histogram[p.length()];
  return histogram;
}

std::vector<NodeIndex> resolve_selector(const Graph& graph,
                                        const NodeSelector& selector) {
  std::vector<NodeIndex> nodes;
  if (selector.kind == NodeSelector::Kind::kIds) {
    for (const std::string& id : selector.ids) {
      auto n = graph.find_node(id);
      if (!n) throw SemanticError("unknown node '" + id + "' in selector");
      nodes.push_back(*n);
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    return nodes;
  }
  Comparator cmp = selector.kind == NodeSelector::Kind::kAttrIn
                       ? Comparator::kIn
                       : Comparator::kEq;
  for (NodeIndex n = 0; n < graph.node_count(); ++n) {
    if (compare_value(graph.node_attr(n, selector.attribute), cmp,
                      selector.values)) {
      nodes.push_back(n);
    }
  }
  return nodes;
}

namespace {

constexpr std::uint32_t kNoParent = std::numeric_limits<std::uint32_t>::max();
constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

// Per-element admissibility, precomputed once per query.
struct Admissible {
  std::vector<char> edge;
  std::vector<char> intermediate;  // intermediate + any-node constraints
  std::vector<char> start;         // in N_start + any-node constraints
  std::vector<char> end;           // in N_end + any-node constraints
  std::vector<std::uint32_t> hops_to_end;
};

Admissible admissibility(const Graph& g, const PathQuery& q,
                         const std::vector<NodeIndex>& starts,
                         const std::vector<NodeIndex>& ends) {
  Admissible a;
  a.edge.assign(g.edge_count(), 1);
  a.intermediate.assign(g.node_count(), 1);
  std::vector<char> any(g.node_count(), 1);
  for (const Constraint& c : q.constraints) {
    if (c.subject == Subject::kEdge) {
      for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        if (a.edge[e] && !edge_matches(g, e, c)) a.edge[e] = 0;
      }
      continue;
    }
    std::vector<char>& target =
        c.subject == Subject::kIntermediate ? a.intermediate : any;
    for (NodeIndex n = 0; n < g.node_count(); ++n) {
      if (target[n] && !node_matches(g, n, c)) target[n] = 0;
    }
  }
  a.start.assign(g.node_count(), 0);
  a.end.assign(g.node_count(), 0);
  for (NodeIndex n = 0; n < g.node_count(); ++n) {
    a.intermediate[n] = a.intermediate[n] && any[n];
  }
  for (NodeIndex n : starts) a.start[n] = any[n];
  for (NodeIndex n : ends) a.end[n] = any[n];

  // Reverse BFS: fewest admissible hops from each node to an end node. Only
  // end nodes and admissible intermediates propagate further back.
  a.hops_to_end.assign(g.node_count(), kUnreachable);
  std::deque<NodeIndex> queue;
  for (NodeIndex n : ends) {
    if (a.end[n]) {
      a.hops_to_end[n] = 0;
      queue.push_back(n);
    }
  }
  while (!queue.empty()) {
    NodeIndex v = queue.front();
    queue.pop_front();
    std::uint32_t d = a.hops_to_end[v];
    if (d >= q.max_len) continue;
    if (d > 0 && !a.intermediate[v]) continue;
    for (EdgeIndex e : g.in_edges(v)) {
      if (!a.edge[e]) continue;
      NodeIndex u = g.source(e);
      if (a.hops_to_end[u] == kUnreachable) {
        a.hops_to_end[u] = d + 1;
        queue.push_back(u);
      }
    }
  }
  return a;
}

struct Partial {
  std::uint32_t parent;
  EdgeIndex edge;
  NodeIndex node;
};

struct SharedState {
  std::atomic<std::size_t> emitted{0};
  std::atomic<bool> abort{false};
};

class Expander {
 public:
  Expander(const Graph& graph, const PathQuery& query, const Admissible& adm,
           SharedState& shared, std::stop_token stop)
      : g_(graph), q_(query), adm_(adm), shared_(shared), stop_(stop) {}

  // Returns false if another worker aborted the query.
  bool run(std::span<const NodeIndex> starts) {
    const std::size_t max_len = q_.max_len;
    levels_.assign(1, {});
    for (NodeIndex s : starts) {
      if (adm_.start[s] && adm_.hops_to_end[s] <= max_len) {
        levels_[0].push_back({kNoParent, 0, s});
      }
    }
    std::size_t ticks = 0;
    for (std::size_t depth = 0; depth < max_len && !levels_[depth].empty();
         ++depth) {
      if (!keep_going()) return false;
      const std::size_t len = depth + 1;
      const bool may_emit =
          q_.len_mode == LengthMode::kAtMost || len == max_len;
      std::vector<Partial> next;
      for (std::uint32_t idx = 0; idx < levels_[depth].size(); ++idx) {
        if ((++ticks & 0xFFF) == 0 && !keep_going()) return false;
        const NodeIndex v = levels_[depth][idx].node;
        for (EdgeIndex e : g_.out_edges(v)) {
          if (!adm_.edge[e]) continue;
          const NodeIndex w = g_.target(e);
          if (q_.path_mode == PathMode::kSimple && on_path(depth, idx, w)) {
            continue;
          }
          if (may_emit && adm_.end[w]) emit(depth, idx, e, w);
          if (len < max_len && adm_.intermediate[w] &&
              adm_.hops_to_end[w] <= max_len - len) {
            next.push_back({idx, e, w});
          }
        }
      }
      levels_.push_back(std::move(next));
    }
    return true;
  }

  std::vector<Path>& paths() { return paths_; }

 private:
  bool keep_going() const {
    if (stop_.stop_requested()) throw Cancelled();
    return !shared_.abort.load(std::memory_order_relaxed);
  }

  bool on_path(std::size_t depth, std::uint32_t idx, NodeIndex w) const {
    for (std::size_t d = depth + 1; d-- > 0;) {
      const Partial& p = levels_[d][idx];
      if (p.node == w) return true;
      idx = p.parent;
    }
    return false;
  }

  void emit(std::size_t depth, std::uint32_t idx, EdgeIndex last_edge,
            NodeIndex last_node) {
    std::size_t count = shared_.emitted.fetch_add(1) + 1;
    if (count > q_.result_cap) {
      shared_.abort = true;
      throw ResultCapExceeded(q_.result_cap, count);
    }
    const std::size_t len = depth + 1;
    std::vector<EdgeIndex> edges(len);
    std::vector<NodeIndex> nodes(len + 1);
    edges[len - 1] = last_edge;
    nodes[len] = last_node;
    for (std::size_t d = depth + 1; d-- > 0;) {
      const Partial& p = levels_[d][idx];
      nodes[d] = p.node;
      if (d > 0) edges[d - 1] = p.edge;
      idx = p.parent;
    }
    paths_.emplace_back(std::move(edges), std::move(nodes));
  }

  const Graph& g_;
  const PathQuery& q_;
  const Admissible& adm_;
  SharedState& shared_;
  std::stop_token stop_;
  std::vector<std::vector<Partial>> levels_;
  std::vector<Path> paths_;
};

}  // namespace

QueryResult enumerate_paths(std::shared_ptr<const Graph> graph,
                            const PathQuery& query,
                            const EnumerateOptions& options) {
  const Graph& g = *graph;
  validate_query(g, query);

  QueryResult result;
  result.graph = graph;
  result.query = query;
  result.start_nodes = resolve_selector(g, query.start);
  result.end_nodes = resolve_selector(g, query.end);
  if (options.stop.stop_requested()) throw Cancelled();

  const Admissible adm =
      admissibility(g, query, result.start_nodes, result.end_nodes);
  SharedState shared;

  unsigned threads = options.threads != 0
                         ? options.threads
                         : std::max(1u, std::thread::hardware_concurrency());
  const std::span<const NodeIndex> starts(result.start_nodes);
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(1, starts.size())));

  std::vector<Expander> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back(g, query, adm, shared, options.stop);
  }
  auto slice = [&](unsigned t) {
    std::size_t begin = starts.size() * t / threads;
    std::size_t end = starts.size() * (t + 1) / threads;
    return starts.subspan(begin, end - begin);
  };

  if (threads == 1) {
    workers[0].run(starts);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
          try {
            workers[t].run(slice(t));
          } catch (...) {
            shared.abort = true;
            errors[t] = std::current_exception();
          }
        });
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::size_t total = 0;
  for (auto& w : workers) total += w.paths().size();
  result.paths.reserve(total);
  for (auto& w : workers) {
    std::move(w.paths().begin(), w.paths().end(),
              std::back_inserter(result.paths));
  }
  std::sort(result.paths.begin(), result.paths.end());
  return result;
}

}  // namespace connview
