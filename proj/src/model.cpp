#include "zenokit/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace zenokit {

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::Less: return "<";
    case Relation::LessEq: return "<=";
    case Relation::Equal: return "==";
    case Relation::GreaterEq: return ">=";
    case Relation::Greater: return ">";
  }
  return "?";
}

std::string_view to_string(ProfileKind k) {
  switch (k) {
    case ProfileKind::M: return "M";
    case ProfileKind::LU: return "LU";
    case ProfileKind::WeakL: return "weakL";
    case ProfileKind::WeakU: return "weakU";
  }
  return "?";
}

std::optional<StateId> TimedAutomaton::find_state(std::string_view name) const {
  auto it = std::find(state_names.begin(), state_names.end(), name);
  if (it == state_names.end()) return std::nullopt;
  return static_cast<StateId>(it - state_names.begin());
}

std::optional<ClockIndex> TimedAutomaton::find_clock(std::string_view name) const {
  auto it = std::find(clock_names.begin(), clock_names.end(), name);
  if (it == clock_names.end()) return std::nullopt;
  return static_cast<ClockIndex>(it - clock_names.begin() + 1);
}

std::vector<std::size_t> TimedAutomaton::outgoing(StateId q) const {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < transitions.size(); ++t)
    if (transitions[t].source == q) out.push_back(t);
  return out;
}

// -- Builder -----------------------------------------------------------------

StateId AutomatonBuilder::state(const std::string& name) {
  if (auto q = ta_.find_state(name)) return *q;
  ta_.state_names.push_back(name);
  return static_cast<StateId>(ta_.state_names.size() - 1);
}

ClockIndex AutomatonBuilder::clock(const std::string& name) {
  if (auto x = ta_.find_clock(name)) return *x;
  ta_.clock_names.push_back(name);
  return ta_.num_clocks();
}

AutomatonBuilder& AutomatonBuilder::initial(const std::string& name) {
  ta_.initial = state(name);
  return *this;
}

AtomicConstraint AutomatonBuilder::atom(const std::string& clock_name, Relation r, std::int64_t c) {
  return {clock(clock_name), r, c};
}

AutomatonBuilder& AutomatonBuilder::transition(const std::string& label, const std::string& source,
                                               const std::string& target, Guard guard,
                                               const std::vector<std::string>& resets) {
  Transition t;
  t.label = label;
  t.source = state(source);
  t.target = state(target);
  t.guard = std::move(guard);
  for (const auto& r : resets) t.resets.insert(clock(r));
  ta_.transitions.push_back(std::move(t));
  return *this;
}

TimedAutomaton AutomatonBuilder::build() const {
  require_valid(ta_);
  return ta_;
}

// -- Validation --------------------------------------------------------------

std::vector<Diagnostic> validate(const TimedAutomaton& ta) {
  std::vector<Diagnostic> out;
  auto report = [&out](std::string msg) { out.push_back({std::move(msg)}); };

  if (ta.state_names.empty()) {
    report("automaton has no states");
  } else if (ta.initial >= ta.num_states()) {
    report("initial state " + std::to_string(ta.initial) + " is not declared");
  }
  if (ta.num_clocks() > kMaxClocks)
    report("too many clocks: " + std::to_string(ta.num_clocks()) + " (limit " + std::to_string(kMaxClocks) + ")");

  std::set<std::string> seen;
  for (const auto& s : ta.state_names)
    if (!seen.insert(s).second) report("duplicate state name '" + s + "'");
  seen.clear();
  for (const auto& c : ta.clock_names)
    if (!seen.insert(c).second) report("duplicate clock name '" + c + "'");

  std::set<std::string> labels;
  const ClockSet declared = ClockSet::all(std::min(ta.num_clocks(), kMaxClocks));
  for (const auto& t : ta.transitions) {
    const std::string where = "transition '" + t.label + "'";
    if (!labels.insert(t.label).second) report("duplicate transition label '" + t.label + "'");
    if (t.source >= ta.num_states()) report(where + " leaves undeclared state " + std::to_string(t.source));
    if (t.target >= ta.num_states()) report(where + " enters undeclared state " + std::to_string(t.target));
    if (!t.resets.is_subset_of(declared)) report(where + " resets an undeclared clock");
    for (const auto& a : t.guard.atoms) {
      if (a.clock == kZeroClock || a.clock > ta.num_clocks())
        report(where + " guards undeclared clock " + std::to_string(a.clock));
      if (a.constant < 0 || a.constant > kMaxConstant)
        report(where + " uses constant " + std::to_string(a.constant) + " outside [0, 2^20]");
    }
  }
  return out;
}

namespace {
std::string join_diagnostics(const std::vector<Diagnostic>& d) {
  std::ostringstream os;
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "; " : "") << d[i].message;
  return os.str();
}
}  // namespace

ValidationError::ValidationError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(join_diagnostics(diagnostics)), diagnostics_(std::move(diagnostics)) {}

void require_valid(const TimedAutomaton& ta) {
  auto d = validate(ta);
  if (!d.empty()) throw ValidationError(std::move(d));
}

// -- Guard analysis ----------------------------------------------------------

bool is_zero_check(const AtomicConstraint& a) {
  return a.constant == 0 && (a.relation == Relation::LessEq || a.relation == Relation::Equal);
}

bool is_lifting(const AtomicConstraint& a) {
  switch (a.relation) {
    case Relation::GreaterEq:
    case Relation::Greater:
    case Relation::Equal: return a.constant >= 1;
    default: return false;
  }
}

namespace {
bool is_upper(Relation r) { return r == Relation::Less || r == Relation::LessEq || r == Relation::Equal; }
bool is_lower(Relation r) { return r == Relation::Greater || r == Relation::GreaterEq || r == Relation::Equal; }
}  // namespace

std::vector<DifferenceConstraint> guard_constraints(const Guard& g) {
  std::vector<DifferenceConstraint> out;
  for (const auto& a : g.atoms) {
    const auto c = static_cast<std::int32_t>(a.constant);
    switch (a.relation) {
      case Relation::Less: out.push_back(clock_lt(a.clock, c)); break;
      case Relation::LessEq: out.push_back(clock_le(a.clock, c)); break;
      case Relation::Equal:
        out.push_back(clock_le(a.clock, c));
        out.push_back(clock_ge(a.clock, c));
        break;
      case Relation::GreaterEq: out.push_back(clock_ge(a.clock, c)); break;
      case Relation::Greater: out.push_back(clock_gt(a.clock, c)); break;
    }
  }
  return out;
}

ClockSet bounded_clocks(const Guard& g) {
  ClockSet out;
  for (const auto& a : g.atoms)
    if (is_upper(a.relation)) out.insert(a.clock);
  return out;
}

ClockSet lifting_clocks(const Guard& g) {
  ClockSet out;
  for (const auto& a : g.atoms)
    if (is_lifting(a)) out.insert(a.clock);
  return out;
}

Dbm constrain(const Dbm& z, const Guard& g) {
  const auto atoms = guard_constraints(g);
  return constrain(z, std::span<const DifferenceConstraint>(atoms));
}

ClockSet relevant_clocks(const TimedAutomaton& ta) {
  ClockSet out;
  for (const auto& t : ta.transitions)
    for (const auto& a : t.guard.atoms)
      if (is_zero_check(a)) out.insert(a.clock);
  return out;
}

ClockSet lifted_clocks(const TimedAutomaton& ta) {
  ClockSet out;
  for (const auto& t : ta.transitions) out = out | lifting_clocks(t.guard);
  return out;
}

TimedAutomaton weaken_zero_checks(const TimedAutomaton& ta) {
  TimedAutomaton out = ta;
  for (auto& t : out.transitions) {
    std::vector<AtomicConstraint> kept;
    for (auto a : t.guard.atoms) {
      if (a.relation == Relation::GreaterEq && a.constant == 0) continue;
      if (a.relation == Relation::Equal && a.constant == 0) a.relation = Relation::LessEq;
      kept.push_back(a);
    }
    t.guard.atoms = std::move(kept);
  }
  return out;
}

// -- Bound profiles ----------------------------------------------------------

std::int32_t BoundProfile::max_constant() const {
  std::int32_t m = 0;
  for (const auto& v : lower)
    if (v) m = std::max(m, *v);
  for (const auto& v : upper)
    if (v) m = std::max(m, *v);
  return m;
}

namespace {
BoundValue max_bound(BoundValue a, BoundValue b) {
  if (!a) return b;
  if (!b) return a;
  return std::max(*a, *b);
}
}  // namespace

BoundProfile compute_bound_profile(const TimedAutomaton& ta, ProfileKind kind) {
  const ClockIndex n = ta.num_clocks();
  BoundProfile p;
  p.kind = kind;
  p.lower.assign(n + 1, std::nullopt);
  p.upper.assign(n + 1, std::nullopt);
  p.lower[0] = p.upper[0] = 0;

  for (const auto& t : ta.transitions)
    for (const auto& a : t.guard.atoms) {
      const auto c = static_cast<std::int32_t>(a.constant);
      if (is_lower(a.relation)) p.lower[a.clock] = max_bound(p.lower[a.clock], c);
      if (is_upper(a.relation)) p.upper[a.clock] = max_bound(p.upper[a.clock], c);
    }

  switch (kind) {
    case ProfileKind::LU: break;
    case ProfileKind::M:
      for (ClockIndex x = 1; x <= n; ++x) p.lower[x] = p.upper[x] = max_bound(p.lower[x], p.upper[x]);
      break;
    case ProfileKind::WeakL: {
      const ClockSet rl = relevant_clocks(ta);
      for (ClockIndex x = 1; x <= n; ++x)
        if (rl.contains(x) && !p.lower[x] && p.upper[x]) p.lower[x] = 0;
      break;
    }
    case ProfileKind::WeakU:
      // U = 0 is lifted as well as U = -inf: with L >= 1 and U = 0 the plain
      // formula relaxes x >= L to x > 0 and forgets the lift.
      for (ClockIndex x = 1; x <= n; ++x)
        if (p.lower[x] && *p.lower[x] >= 1 && (!p.upper[x] || *p.upper[x] < 1)) p.upper[x] = 1;
      break;
  }
  return p;
}

}  // namespace zenokit
