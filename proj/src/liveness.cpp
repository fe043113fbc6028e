#include "zenokit/liveness.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace zenokit {

EdgeLabels edge_labels(const AnnotatedZoneGraph& g, const TimedAutomaton& ta) {
  EdgeLabels out;
  out.reserve(g.edges.size());
  for (const auto& e : g.edges) {
    if (e.is_tau()) {
      out.push_back({{}, {}, true});
    } else {
      const auto& t = ta.transitions.at(e.transition);
      out.push_back({bounded_clocks(t.guard), t.resets, false});
    }
  }
  return out;
}

std::vector<Component> sccs(const AnnotatedZoneGraph& g) {
  std::vector<std::size_t> nodes(g.nodes.size());
  std::iota(nodes.begin(), nodes.end(), std::size_t{0});
  std::vector<std::size_t> edges(g.edges.size());
  std::iota(edges.begin(), edges.end(), std::size_t{0});
  return sccs(g, nodes, edges);
}

std::vector<Component> sccs(const AnnotatedZoneGraph& g, const std::vector<std::size_t>& nodes,
                            const std::vector<std::size_t>& edges) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  const std::size_t n = g.nodes.size();
  std::vector<bool> member(n, false);
  for (std::size_t v : nodes) member[v] = true;
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t e : edges) {
    const auto& edge = g.edges[e];
    if (member[edge.source] && member[edge.target]) out[edge.source].push_back(e);
  }

  // Iterative Tarjan.
  std::vector<std::size_t> index(n, kUnset), low(n, 0), comp_of(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> call;  // (node, next out-edge position)
  std::vector<Component> result;
  std::size_t counter = 0;

  std::vector<std::size_t> order(nodes);
  std::sort(order.begin(), order.end());
  for (std::size_t root : order) {
    if (index[root] != kUnset) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      if (pos < out[v].size()) {
        const std::size_t w = g.edges[out[v][pos++]].target;
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const std::size_t done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] != index[done]) continue;
      Component c;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp_of[w] = result.size();
        c.nodes.push_back(w);
      } while (w != done);
      std::sort(c.nodes.begin(), c.nodes.end());
      result.push_back(std::move(c));
    }
  }

  std::vector<std::size_t> sorted_edges(edges);
  std::sort(sorted_edges.begin(), sorted_edges.end());
  for (std::size_t e : sorted_edges) {
    const auto& edge = g.edges[e];
    if (!member[edge.source] || !member[edge.target]) continue;
    if (comp_of[edge.source] == comp_of[edge.target]) result[comp_of[edge.source]].edges.push_back(e);
  }
  for (auto& c : result) c.trivial = c.edges.empty();
  std::sort(result.begin(), result.end(),
            [](const Component& a, const Component& b) { return a.nodes.front() < b.nodes.front(); });
  return result;
}

std::vector<Component> prune_to_unblocked(const AnnotatedZoneGraph& g, const Component& scc,
                                          const EdgeLabels& labels) {
  std::vector<Component> result;
  std::vector<Component> work;
  if (!scc.trivial) work.push_back(scc);
  while (!work.empty()) {
    Component c = std::move(work.back());
    work.pop_back();
    ClockSet resets;
    for (std::size_t e : c.edges) resets = resets | labels[e].reset;
    std::vector<std::size_t> kept;
    for (std::size_t e : c.edges)
      if (labels[e].bounded.is_subset_of(resets)) kept.push_back(e);
    if (kept.size() == c.edges.size()) {
      result.push_back(std::move(c));
      continue;
    }
    for (auto& sub : sccs(g, c.nodes, kept))
      if (!sub.trivial) work.push_back(std::move(sub));
  }
  std::sort(result.begin(), result.end(),
            [](const Component& a, const Component& b) { return a.nodes.front() < b.nodes.front(); });
  return result;
}

namespace {

/// Shortest path (edge indices) from `from` to the first node satisfying
/// `goal`, using only edges in `out`. Empty optional when none is reachable.
template <typename Goal>
std::optional<std::vector<std::size_t>> bfs_path(const AnnotatedZoneGraph& g,
                                                 const std::vector<std::vector<std::size_t>>& out, std::size_t from,
                                                 Goal goal) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> via(g.nodes.size(), kUnset);
  std::vector<bool> seen(g.nodes.size(), false);
  std::deque<std::size_t> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    if (goal(v)) {
      std::vector<std::size_t> path;
      for (std::size_t u = v; u != from; u = g.edges[via[u]].source) path.push_back(via[u]);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (std::size_t e : out[v]) {
      const std::size_t w = g.edges[e].target;
      if (!seen[w]) {
        seen[w] = true;
        via[w] = e;
        queue.push_back(w);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Lasso find_lasso(const AnnotatedZoneGraph& g, const Component& component, std::size_t anchor) {
  if (!std::binary_search(component.nodes.begin(), component.nodes.end(), anchor))
    throw std::invalid_argument("find_lasso: anchor is not in the component");
  if (component.edges.empty()) throw std::invalid_argument("find_lasso: component has no edge");

  Lasso lasso;
  auto prefix = bfs_path(g, g.out_edges(), g.initial, [&](std::size_t v) { return v == anchor; });
  if (!prefix) throw std::invalid_argument("find_lasso: anchor is unreachable from the initial node");
  lasso.prefix = std::move(*prefix);

  std::vector<std::vector<std::size_t>> inner(g.nodes.size());
  for (std::size_t e : component.edges) inner[g.edges[e].source].push_back(e);
  std::vector<bool> pending(g.edges.size(), false);
  std::size_t remaining = 0;
  for (std::size_t e : component.edges) {
    pending[e] = true;
    ++remaining;
  }
  auto walk = [&](const std::vector<std::size_t>& path) {
    for (std::size_t e : path) {
      if (pending[e]) {
        pending[e] = false;
        --remaining;
      }
      lasso.cycle.push_back(e);
    }
  };

  // Greedy tour: go to the nearest node with an unused edge, take that edge.
  std::size_t at = anchor;
  while (remaining > 0) {
    auto has_pending = [&](std::size_t v) {
      return std::any_of(inner[v].begin(), inner[v].end(), [&](std::size_t e) { return pending[e]; });
    };
    auto path = bfs_path(g, inner, at, has_pending);
    walk(*path);
    const std::size_t v = path->empty() ? at : g.edges[path->back()].target;
    const std::size_t e = *std::find_if(inner[v].begin(), inner[v].end(), [&](std::size_t x) { return pending[x]; });
    walk({e});
    at = g.edges[e].target;
  }
  walk(*bfs_path(g, inner, at, [&](std::size_t v) { return v == anchor; }));
  return lasso;
}

Witness witness_labels(const AnnotatedZoneGraph& g, const TimedAutomaton& ta, const Lasso& lasso) {
  Witness w;
  for (std::size_t e : lasso.prefix) w.prefix.push_back(edge_label(ta, g.edges[e]));
  for (std::size_t e : lasso.cycle) w.cycle.push_back(edge_label(ta, g.edges[e]));
  return w;
}

}  // namespace zenokit
