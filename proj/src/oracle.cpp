#include "zenokit/oracle.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

#include "zenokit/liveness.hpp"
#include "zenokit/nonzeno.hpp"
#include "zenokit/zeno.hpp"

namespace zenokit {

bool sat_enumerate(const Formula& phi) {
  require_well_formed(phi);
  if (phi.num_vars > kMaxSatVariables)
    throw std::invalid_argument("sat_enumerate: " + std::to_string(phi.num_vars) + " variables exceed the limit of " +
                                std::to_string(kMaxSatVariables));
  for (std::uint32_t a = 0; a < (1U << phi.num_vars); ++a) {
    const bool all = std::all_of(phi.clauses.begin(), phi.clauses.end(), [a](const auto& clause) {
      return std::any_of(clause.begin(), clause.end(),
                         [a](const Literal& l) { return ((a >> (l.variable - 1)) & 1U) == (l.positive ? 1U : 0U); });
    });
    if (all) return true;
  }
  return false;
}

namespace {

/// Verdict and number of nodes explored to reach it.
std::pair<bool, std::size_t> tick_check(const TimedAutomaton& ta, std::size_t node_limit) {
  const TickAutomaton t = add_tick_clock(ta);
  const std::set<std::string> ticks(t.tick_labels.begin(), t.tick_labels.end());
  auto has_tick_cycle = [&](const AnnotatedZoneGraph& g) {
    for (const auto& c : sccs(g))
      for (std::size_t e : c.edges)
        if (ticks.count(t.automaton.transitions[g.edges[e].transition].label)) return true;
    return false;
  };
  bool found = false;
  const AnnotatedZoneGraph g =
      detail::explore_zg(ZoneSemantics(t.automaton, abstraction::kM), node_limit,
                         [&](const AnnotatedZoneGraph& part) { return found = has_tick_cycle(part); },
                         detail::ExploreOrder::Depth);
  if (!found) found = has_tick_cycle(g);
  return {found, g.nodes.size()};
}

}  // namespace

bool nonzeno_via_tick(const TimedAutomaton& ta, std::size_t node_limit) { return tick_check(ta, node_limit).first; }

std::string_view to_string(LbaOutcome o) {
  switch (o) {
    case LbaOutcome::Accept: return "accept";
    case LbaOutcome::Reject: return "reject";
    case LbaOutcome::Timeout: return "timeout";
  }
  return "?";
}

LbaOutcome simulate_lba(const Lba& b, const std::vector<int>& w, std::size_t step_limit) {
  require_valid(b);
  require_valid_word(b, w);
  std::vector<int> tape = w;
  std::size_t q = b.initial;
  int head = 0;
  for (std::size_t step = 0;; ++step) {
    if (q == b.accepting) return LbaOutcome::Accept;
    if (step == step_limit) return LbaOutcome::Timeout;
    auto t = std::find_if(b.transitions.begin(), b.transitions.end(),
                          [&](const LbaTransition& x) { return x.source == q && x.read == tape[head]; });
    if (t == b.transitions.end()) return LbaOutcome::Reject;
    const int next = head + t->move;
    if (next < 0 || next >= static_cast<int>(tape.size())) return LbaOutcome::Reject;
    tape[head] = t->write;
    head = next;
    q = t->target;
  }
}

std::string_view to_string(Property p) { return p == Property::NonZeno ? "nonzeno" : "zeno"; }

std::optional<Property> parse_property(std::string_view name) {
  if (name == "nonzeno") return Property::NonZeno;
  if (name == "zeno") return Property::Zeno;
  return std::nullopt;
}

CrossCheckReport cross_check(const TimedAutomaton& ta, Property property, const std::vector<AbstractionKind>& kinds,
                             std::size_t node_limit) {
  CrossCheckReport report;
  report.property = property;
  for (const auto& kind : kinds) {
    CrossCheckRow row;
    row.name = to_string(kind);
    try {
      const Verdict v =
          property == Property::NonZeno ? check_nonzeno(ta, kind, node_limit) : check_zeno(ta, kind, node_limit);
      row.verdict = v.answer;
      row.nodes = v.nodes;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    report.rows.push_back(std::move(row));
  }
  if (property == Property::NonZeno) {
    CrossCheckRow row;
    row.name = "tick";
    try {
      const auto [verdict, nodes] = tick_check(ta, node_limit);
      row.verdict = verdict;
      row.nodes = nodes;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    report.rows.push_back(std::move(row));
  }
  std::optional<bool> first;
  for (const auto& r : report.rows) {
    if (!r.verdict) continue;
    if (!first) first = r.verdict;
    if (*first != *r.verdict) report.agree = false;
  }
  return report;
}

std::string CrossCheckReport::render() const {
  std::ostringstream os;
  std::size_t width = 4;
  for (const auto& r : rows) width = std::max(width, r.name.size());
  os << std::left << std::setw(static_cast<int>(width)) << "kind"
     << "  verdict  " << std::right << std::setw(10) << "nodes" << "\n";
  for (const auto& r : rows) {
    os << std::left << std::setw(static_cast<int>(width)) << r.name << "  " << std::setw(7)
       << (r.verdict ? (*r.verdict ? "YES" : "NO") : "ERROR") << "  " << std::right << std::setw(10) << r.nodes;
    if (!r.error.empty()) os << "  " << r.error;
    os << "\n";
  }
  os << "\n";
  for (const auto& r : rows) {
    os << "kind=" << r.name << " verdict=" << (r.verdict ? (*r.verdict ? "yes" : "no") : "error") << " nodes=" << r.nodes
       << "\n";
  }
  os << "property=" << to_string(property) << " agree=" << (agree ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace zenokit
