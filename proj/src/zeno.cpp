#include "zenokit/zeno.hpp"

#include <algorithm>
#include <bit>

namespace zenokit {

namespace {
void require_lift_safe(AbstractionKind kind) {
  if (!is_lift_safe(kind))
    throw UnsupportedAbstractionError("slow zone graph needs a lift-safe abstraction, got " + to_string(kind));
}
}  // namespace

std::vector<Successor> szg_successors(const ZoneSemantics& sem, const SzgNode& n) {
  require_lift_safe(sem.kind());
  const TimedAutomaton& ta = sem.automaton();
  std::vector<Successor> out;
  for (std::size_t t : sem.outgoing(n.state)) {
    Dbm z = sem.guarded(n.zone, t);
    if (is_empty(z)) continue;
    if (n.mode == Mode::Slow) {
      const auto members = ta.transitions[t].resets.members();
      const bool slow_ok = std::all_of(members.begin(), members.end(),
                                       [&](ClockIndex x) { return consistent_with(z, {clock_lt(x, 1)}); });
      if (!slow_ok) continue;
    }
    ZgNode next = sem.advance(std::move(z), t);
    out.push_back({t, {next.state, std::move(next.zone), ClockSet{}, n.mode}});
  }
  if (n.mode == Mode::Free) out.push_back({kTau, {n.state, n.zone, ClockSet{}, Mode::Slow}});
  return out;
}

std::vector<Successor> szg_successors(const TimedAutomaton& ta, AbstractionKind kind, const SzgNode& n) {
  return szg_successors(ZoneSemantics(ta, kind), n);
}

namespace {

AnnotatedZoneGraph szg(const ZoneSemantics& sem, std::size_t node_limit, const detail::Checkpoint& checkpoint) {
  const ZgNode root = sem.initial();
  return detail::explore_graph(
      AnnotationKind::Mode, GraphNode{root.state, root.zone, ClockSet{}, Mode::Free},
      [&](const GraphNode& n, auto&& emit) {
        for (auto& s : szg_successors(sem, n)) emit(s.transition, std::move(s.node));
      },
      node_limit, checkpoint, checkpoint ? detail::ExploreOrder::Depth : detail::ExploreOrder::Breadth);
}

bool find_slow_cycle(const AnnotatedZoneGraph& g, const TimedAutomaton& ta, Verdict& v) {
  std::vector<std::size_t> slow_nodes, slow_edges;
  for (std::size_t n = 0; n < g.nodes.size(); ++n)
    if (g.nodes[n].mode == Mode::Slow) slow_nodes.push_back(n);
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    if (!g.edges[e].is_tau() && g.nodes[g.edges[e].source].mode == Mode::Slow) slow_edges.push_back(e);
  for (const auto& c : sccs(g, slow_nodes, slow_edges)) {
    if (c.trivial) continue;
    v.answer = true;
    v.witness = witness_labels(g, ta, find_lasso(g, c, c.nodes.front()));
    return true;
  }
  return false;
}

/// Restrictions of the zone graph tried in order; see check_zeno_general.
bool find_guessed_cycle(const AnnotatedZoneGraph& g, const TimedAutomaton& ta, const std::vector<ClockSet>& guesses,
                        Verdict& v) {
  std::vector<std::size_t> all_nodes(g.nodes.size());
  for (std::size_t n = 0; n < all_nodes.size(); ++n) all_nodes[n] = n;
  for (ClockSet w : guesses) {
    std::vector<std::size_t> allowed;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      const Transition& t = ta.transitions[g.edges[e].transition];
      if (lifting_clocks(t.guard).is_subset_of(w) && !t.resets.intersects(w)) allowed.push_back(e);
    }
    for (const auto& c : sccs(g, all_nodes, allowed)) {
      if (c.trivial) continue;
      v.answer = true;
      v.witness = witness_labels(g, ta, find_lasso(g, c, c.nodes.front()));
      return true;
    }
  }
  return false;
}

}  // namespace

AnnotatedZoneGraph build_szg(const TimedAutomaton& ta, AbstractionKind kind, std::size_t node_limit) {
  require_lift_safe(kind);
  return szg(ZoneSemantics(ta, kind), node_limit, {});
}

Verdict check_zeno_liftsafe(const TimedAutomaton& ta, AbstractionKind kind, std::size_t node_limit) {
  require_lift_safe(kind);
  Verdict v;
  const AnnotatedZoneGraph g = szg(ZoneSemantics(ta, kind), node_limit,
                                   [&](const AnnotatedZoneGraph& part) { return find_slow_cycle(part, ta, v); });
  if (!v.answer) find_slow_cycle(g, ta, v);
  v.nodes = g.nodes.size();
  v.edges = g.edges.size();
  return v;
}

std::vector<ClockSet> subsets_by_size(ClockSet s) {
  const auto members = s.members();
  const std::size_t k = members.size();
  if (k > 24) throw std::length_error("too many lifted clocks to enumerate");
  std::vector<ClockSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    ClockSet w;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) w.insert(members[i]);
    out.push_back(w);
  }
  std::stable_sort(out.begin(), out.end(), [](ClockSet a, ClockSet b) {
    const auto ca = std::popcount(a.bits()), cb = std::popcount(b.bits());
    return ca != cb ? ca < cb : a.bits() < b.bits();
  });
  return out;
}

Verdict check_zeno_general(const TimedAutomaton& ta, AbstractionKind kind, std::size_t node_limit) {
  const std::vector<ClockSet> guesses = subsets_by_size(lifted_clocks(ta));
  Verdict v;
  const AnnotatedZoneGraph g =
      detail::explore_zg(ZoneSemantics(ta, kind), node_limit,
                         [&](const AnnotatedZoneGraph& part) { return find_guessed_cycle(part, ta, guesses, v); },
                         detail::ExploreOrder::Depth);
  if (!v.answer) find_guessed_cycle(g, ta, guesses, v);
  v.nodes = g.nodes.size();
  v.edges = g.edges.size();
  return v;
}

Verdict check_zeno(const TimedAutomaton& ta, AbstractionKind kind, std::size_t node_limit) {
  return is_lift_safe(kind) ? check_zeno_liftsafe(ta, kind, node_limit) : check_zeno_general(ta, kind, node_limit);
}

}  // namespace zenokit
