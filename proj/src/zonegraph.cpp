#include "zenokit/zonegraph.hpp"

#include <sstream>

namespace zenokit {

ResourceLimitError::ResourceLimitError(std::size_t limit)
    : std::runtime_error("node limit of " + std::to_string(limit) + " nodes exceeded"), limit_(limit) {}

std::vector<std::vector<std::size_t>> AnnotatedZoneGraph::out_edges() const {
  std::vector<std::vector<std::size_t>> out(nodes.size());
  for (std::size_t e = 0; e < edges.size(); ++e) out[edges[e].source].push_back(e);
  return out;
}

ZoneSemantics::ZoneSemantics(const TimedAutomaton& ta, AbstractionKind kind)
    : ta_(&ta),
      kind_(kind),
      bounds_(compute_bound_profile(ta, kind.profile)),
      outgoing_(ta.num_states()),
      relevant_(relevant_clocks(ta)) {
  for (std::size_t t = 0; t < ta.transitions.size(); ++t) {
    guards_.push_back(guard_constraints(ta.transitions[t].guard));
    outgoing_.at(ta.transitions[t].source).push_back(t);
  }
}

ZgNode ZoneSemantics::advance(Dbm guarded, std::size_t t) const {
  const Transition& tr = ta_->transitions[t];
  return {tr.target, abstract(up(reset(std::move(guarded), tr.resets)))};
}

ZgNode ZoneSemantics::initial() const {
  return {ta_->initial, abstract(up(Dbm::origin(ta_->num_clocks())))};
}

std::optional<ZgNode> ZoneSemantics::post(const ZgNode& n, const Transition& t) const {
  Dbm z = constrain(n.zone, t.guard);
  if (is_empty(z)) return std::nullopt;
  return ZgNode{t.target, abstract(up(reset(std::move(z), t.resets)))};
}

ZgNode initial(const TimedAutomaton& ta, AbstractionKind kind) { return ZoneSemantics(ta, kind).initial(); }

std::optional<ZgNode> post(const TimedAutomaton& ta, AbstractionKind kind, const ZgNode& n, const Transition& t) {
  return ZoneSemantics(ta, kind).post(n, t);
}

AnnotatedZoneGraph explore(const TimedAutomaton& ta, AbstractionKind kind, std::size_t node_limit) {
  return detail::explore_zg(ZoneSemantics(ta, kind), node_limit);
}

namespace detail {

AnnotatedZoneGraph explore_zg(const ZoneSemantics& sem, std::size_t node_limit, const Checkpoint& checkpoint,
                              ExploreOrder order) {
  const ZgNode root = sem.initial();
  return explore_graph(
      AnnotationKind::Plain, GraphNode{root.state, root.zone, {}, Mode::Free},
      [&](const GraphNode& node, auto&& emit) {
        for (std::size_t t : sem.outgoing(node.state)) {
          Dbm z = sem.guarded(node.zone, t);
          if (is_empty(z)) continue;
          ZgNode next = sem.advance(std::move(z), t);
          emit(t, GraphNode{next.state, std::move(next.zone), {}, Mode::Free});
        }
      },
      node_limit, checkpoint, order);
}

}  // namespace detail

std::string edge_label(const TimedAutomaton& ta, const GraphEdge& e) {
  return e.is_tau() ? std::string("tau") : ta.transitions.at(e.transition).label;
}

namespace {

std::string clock_text(ClockIndex x, const std::vector<std::string>& names) {
  return x - 1 < names.size() ? names[x - 1] : "x" + std::to_string(x);
}

std::string constraint_text(ClockIndex i, ClockIndex j, Bound b, const std::vector<std::string>& names) {
  std::ostringstream os;
  const char* op = b.is_strict() ? "<" : "<=";
  if (j == 0) {
    os << clock_text(i, names) << op << b.value();
  } else if (i == 0) {
    os << clock_text(j, names) << (b.is_strict() ? ">" : ">=") << -b.value();
  } else {
    os << clock_text(i, names) << "-" << clock_text(j, names) << op << b.value();
  }
  return os.str();
}

}  // namespace

std::string describe_zone(const Dbm& z, const std::vector<std::string>& clock_names) {
  if (is_empty(z)) return "false";
  const ClockIndex n = z.num_clocks();
  // Greedily drop every entry implied by the entries still kept, clock
  // differences first so that plain clock bounds survive.
  Dbm kept = z;
  for (int pass = 0; pass < 2; ++pass)
    for (ClockIndex i = 0; i <= n; ++i)
      for (ClockIndex j = 0; j <= n; ++j) {
        if (i == j || kept(i, j).is_infinity() || (pass == 0) == (i == 0 || j == 0)) continue;
        Dbm without = kept;
        without.set(i, j, Bound::infinity());
        if (canonicalize(without)(i, j) <= z(i, j)) kept = without;
      }
  std::vector<std::string> parts;
  for (ClockIndex i = 0; i <= n; ++i)
    for (ClockIndex j = 0; j <= n; ++j) {
      if (i == j || kept(i, j).is_infinity()) continue;
      // Pair opposite bounds into an equality where possible.
      if (j < i && !kept(j, i).is_infinity() && !kept(i, j).is_strict() && !kept(j, i).is_strict() &&
          kept(i, j).value() == -kept(j, i).value())
        continue;
      if (i < j && !kept(j, i).is_infinity() && !kept(i, j).is_strict() && !kept(j, i).is_strict() &&
          kept(i, j).value() == -kept(j, i).value()) {
        std::ostringstream os;
        if (i == 0)
          os << clock_text(j, clock_names) << "==" << -kept(i, j).value();
        else
          os << clock_text(i, clock_names) << "-" << clock_text(j, clock_names) << "==" << kept(i, j).value();
        parts.push_back(os.str());
        continue;
      }
      parts.push_back(constraint_text(i, j, kept(i, j), clock_names));
    }
  if (parts.empty()) return "true";
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? " && " : "") + parts[k];
  return out;
}

namespace {
std::string annotation_text(const AnnotatedZoneGraph& g, const GraphNode& n, const TimedAutomaton& ta) {
  switch (g.annotation) {
    case AnnotationKind::Plain: return "";
    case AnnotationKind::Mode: return n.mode == Mode::Slow ? "slow" : "free";
    case AnnotationKind::GuessSet: {
      std::string s = "{";
      bool first = true;
      for (ClockIndex x : n.guess.members()) {
        s += (first ? "" : ",") + ta.clock_name(x);
        first = false;
      }
      return s + "}";
    }
  }
  return "";
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\' || c == '{' || c == '}' || c == '|' || c == '<' || c == '>') out += '\\';
    out += c;
  }
  return out;
}
}  // namespace

void write_dot(std::ostream& os, const AnnotatedZoneGraph& g, const TimedAutomaton& ta) {
  os << "digraph zonegraph {\n  node [shape=record];\n";
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    const auto& n = g.nodes[v];
    os << "  n" << v << " [label=\"" << dot_escape(ta.state_names[n.state]) << " | "
       << dot_escape(describe_zone(n.zone, ta.clock_names)) << " | " << dot_escape(annotation_text(g, n, ta))
       << "\"" << (v == g.initial ? ", peripheries=2" : "") << "];\n";
  }
  for (const auto& e : g.edges) {
    os << "  n" << e.source << " -> n" << e.target << " [label=\"" << dot_escape(edge_label(ta, e)) << "\""
       << (e.is_tau() ? ", style=dashed" : "") << "];\n";
  }
  os << "}\n";
}

}  // namespace zenokit
