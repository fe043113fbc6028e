#include "zenokit/nonzeno.hpp"

#include <algorithm>

namespace zenokit {

RgzgNode rgzg_initial(const ZoneSemantics& sem) {
  const ZgNode z = sem.initial();
  return {z.state, z.zone, relevant_clocks(sem.automaton()), Mode::Free};
}

std::vector<Successor> rgzg_successors(const ZoneSemantics& sem, const RgzgNode& n) {
  const ClockSet rl = sem.relevant();
  std::vector<DifferenceConstraint> positive;
  for (ClockIndex x : (rl - n.guess).members()) positive.push_back(clock_gt(x, 0));

  std::vector<Successor> out;
  for (std::size_t t : sem.outgoing(n.state)) {
    Dbm z = sem.guarded(n.zone, t);
    if (is_empty(z)) continue;
    if (!positive.empty() && !consistent_with(z, std::span<const DifferenceConstraint>(positive))) continue;
    ZgNode next = sem.advance(std::move(z), t);
    const ClockSet guess = (n.guess | sem.automaton().transitions[t].resets) & rl & zero_clocks(next.zone);
    out.push_back({t, {next.state, std::move(next.zone), guess, Mode::Free}});
  }
  if (!n.guess.empty()) out.push_back({kTau, {n.state, n.zone, ClockSet{}, Mode::Free}});
  return out;
}

std::vector<Successor> rgzg_successors(const TimedAutomaton& ta, AbstractionKind kind, const RgzgNode& n) {
  return rgzg_successors(ZoneSemantics(ta, kind), n);
}

namespace {

AnnotatedZoneGraph build(const ZoneSemantics& sem, std::size_t node_limit, const detail::Checkpoint& checkpoint) {
  return detail::explore_graph(
      AnnotationKind::GuessSet, rgzg_initial(sem),
      [&](const GraphNode& n, auto&& emit) {
        for (auto& s : rgzg_successors(sem, n)) emit(s.transition, std::move(s.node));
      },
      node_limit, checkpoint, checkpoint ? detail::ExploreOrder::Depth : detail::ExploreOrder::Breadth);
}

bool find_accepting(const AnnotatedZoneGraph& g, const TimedAutomaton& ta, Verdict& v) {
  const EdgeLabels labels = edge_labels(g, ta);
  for (const auto& scc : sccs(g)) {
    if (scc.trivial) continue;
    for (const auto& c : prune_to_unblocked(g, scc, labels)) {
      const bool has_action = std::any_of(c.edges.begin(), c.edges.end(), [&](std::size_t e) { return !labels[e].tau; });
      if (!has_action) continue;
      auto clear = std::find_if(c.nodes.begin(), c.nodes.end(), [&](std::size_t n) { return g.nodes[n].is_clear(); });
      if (clear == c.nodes.end()) continue;
      v.answer = true;
      v.witness = witness_labels(g, ta, find_lasso(g, c, *clear));
      return true;
    }
  }
  return false;
}

}  // namespace

AnnotatedZoneGraph build_rgzg(const TimedAutomaton& ta, AbstractionKind kind, std::size_t node_limit) {
  return build(ZoneSemantics(ta, kind), node_limit, {});
}

Verdict check_nonzeno(const TimedAutomaton& ta, AbstractionKind kind, std::size_t node_limit) {
  Verdict v;
  const AnnotatedZoneGraph g = build(ZoneSemantics(ta, kind), node_limit,
                                     [&](const AnnotatedZoneGraph& part) { return find_accepting(part, ta, v); });
  if (!v.answer) find_accepting(g, ta, v);
  v.nodes = g.nodes.size();
  v.edges = g.edges.size();
  return v;
}

}  // namespace zenokit
