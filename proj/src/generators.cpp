#include "zenokit/generators.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace zenokit {

void require_well_formed(const Formula& phi) {
  if (phi.num_vars < 0) throw std::invalid_argument("formula: negative variable count");
  for (std::size_t m = 0; m < phi.clauses.size(); ++m)
    for (const auto& l : phi.clauses[m])
      if (l.variable < 1 || l.variable > phi.num_vars)
        throw std::invalid_argument("formula: clause " + std::to_string(m + 1) + " uses variable " +
                                    std::to_string(l.variable) + " outside 1.." + std::to_string(phi.num_vars));
}

namespace {

std::string literal_clock(int variable, bool positive) {
  return (positive ? "x" : "xb") + std::to_string(variable);
}

enum class ClauseGuard { ZeroCheck, NegatedLift };

TimedAutomaton sat_skeleton(const Formula& phi, ClauseGuard style) {
  require_well_formed(phi);
  const int k = phi.num_vars;
  const auto n = phi.clauses.size();
  AutomatonBuilder b;
  for (int i = 0; i <= k; ++i) b.state("q" + std::to_string(i));
  for (std::size_t m = 0; m <= n; ++m) b.state("r" + std::to_string(m));
  for (int i = 1; i <= k; ++i) {
    b.clock(literal_clock(i, true));
    b.clock(literal_clock(i, false));
  }
  b.initial("q0");

  for (int i = 1; i <= k; ++i) {
    const auto from = "q" + std::to_string(i - 1), to = "q" + std::to_string(i);
    b.transition("a" + std::to_string(i), from, to, {}, {literal_clock(i, true)});
    b.transition("b" + std::to_string(i), from, to, {}, {literal_clock(i, false)});
  }
  b.transition("go", "q" + std::to_string(k), "r0");
  for (std::size_t m = 1; m <= n; ++m) {
    const auto from = "r" + std::to_string(m - 1), to = "r" + std::to_string(m);
    for (int j = 0; j < 3; ++j) {
      const Literal l = phi.clauses[m - 1][j];
      Guard g;
      if (style == ClauseGuard::ZeroCheck)
        g.atoms.push_back(b.atom(literal_clock(l.variable, l.positive), Relation::LessEq, 0));
      else
        g.atoms.push_back(b.atom(literal_clock(l.variable, !l.positive), Relation::GreaterEq, 1));
      b.transition("c" + std::to_string(m) + "_" + std::to_string(j + 1), from, to, std::move(g));
    }
  }
  b.transition("back", "r" + std::to_string(n), "q0");
  return b.build();
}

}  // namespace

TimedAutomaton gen_nz_automaton(const Formula& phi) { return sat_skeleton(phi, ClauseGuard::ZeroCheck); }

TimedAutomaton gen_z_automaton(const Formula& phi) { return sat_skeleton(phi, ClauseGuard::NegatedLift); }

// -- LBA ---------------------------------------------------------------------

void require_valid(const Lba& b) {
  if (b.k < 2) throw std::invalid_argument("lba: alphabet size k must be at least 2");
  if (b.states.empty()) throw std::invalid_argument("lba: no states");
  std::set<std::string> names;
  for (const auto& q : b.states) {
    const bool plain = !q.empty() && std::all_of(q.begin(), q.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
    if (!plain) throw std::invalid_argument("lba: state name '" + q + "' must be letters, digits or '_'");
    if (!names.insert(q).second) throw std::invalid_argument("lba: duplicate state " + q);
  }
  if (b.initial >= b.states.size() || b.accepting >= b.states.size())
    throw std::invalid_argument("lba: initial or accepting state undeclared");
  std::set<std::pair<std::size_t, int>> seen;
  for (const auto& t : b.transitions) {
    if (t.source >= b.states.size() || t.target >= b.states.size())
      throw std::invalid_argument("lba: transition uses an undeclared state");
    if (t.read < 1 || t.read >= b.k || t.write < 1 || t.write >= b.k)
      throw std::invalid_argument("lba: tape symbols must lie in 1.." + std::to_string(b.k - 1));
    if (t.move < -1 || t.move > 1) throw std::invalid_argument("lba: move must be -1, 0 or +1");
    if (t.source == b.accepting)
      throw std::invalid_argument("lba: accepting state " + b.states[t.source] + " has an outgoing transition");
    if (!seen.insert({t.source, t.read}).second)
      throw std::invalid_argument("lba: nondeterministic on state " + b.states[t.source] + " reading " +
                                  std::to_string(t.read));
  }
}

void require_valid_word(const Lba& b, const std::vector<int>& w) {
  if (w.empty()) throw std::invalid_argument("lba: input word must be non-empty");
  for (int s : w)
    if (s < 1 || s >= b.k) throw std::invalid_argument("lba: word symbol " + std::to_string(s) + " not in 1.." +
                                                       std::to_string(b.k - 1));
}

std::string lba_state_name(const Lba& b, std::size_t q, int p) { return b.states.at(q) + "@" + std::to_string(p); }

std::vector<std::string> lba_accepting_states(const Lba& b, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t p = 1; p <= n; ++p) out.push_back(lba_state_name(b, b.accepting, static_cast<int>(p)));
  return out;
}

TimedAutomaton gen_lba_automaton(const Lba& b, const std::vector<int>& w) {
  require_valid(b);
  require_valid_word(b, w);
  const int n = static_cast<int>(w.size());
  const int k = b.k;
  const std::int64_t period = static_cast<std::int64_t>(n + 1) * (k + 1);
  const std::string pace = "x";
  const std::string sep = "xs";
  auto cell = [](int j) { return "x" + std::to_string(j); };

  AutomatonBuilder a;
  a.state("qinit@0");
  a.initial("qinit@0");
  a.clock(pace);
  for (int j = 1; j <= n; ++j) a.clock(cell(j));
  a.clock(sep);
  for (std::size_t q = 0; q < b.states.size(); ++q)
    for (int p = 1; p <= n; ++p) a.state(lba_state_name(b, q, p));

  // One symbol slot: an edge at x == s resetting `store`, an intermediate
  // state, then x == k+1 resetting x into `to`. Labels derive from `mid`.
  auto slot = [&](const std::string& from, const std::string& mid, const std::string& to, Guard g,
                  const std::string& store) {
    a.transition(mid + "/r", from, mid, std::move(g), {store});
    a.transition(mid + "/p", mid, to, {{a.atom(pace, Relation::Equal, k + 1)}}, {pace});
  };
  auto eq = [&](const std::string& clock, std::int64_t c) { return a.atom(clock, Relation::Equal, c); };

  // Initialization: write w into x1..xn, then the separator.
  std::string at = "qinit@0";
  for (int j = 1; j <= n; ++j) {
    const std::string next = "qinit@0." + std::to_string(j);
    slot(at, "qinit@0.c" + std::to_string(j), next, {{eq(pace, w[j - 1])}}, cell(j));
    at = next;
  }
  slot(at, "qinit@0.s", lba_state_name(b, b.initial, 1), {{eq(pace, k)}}, sep);

  // Unchanged cells j in [lo, hi] read as loops on `state`.
  auto copy_loops = [&](const std::string& state, int lo, int hi) {
    for (int j = lo; j <= hi; ++j)
      for (int s = 1; s < k; ++s)
        slot(state, state + ".c" + std::to_string(j) + "s" + std::to_string(s), state,
             {{eq(pace, s), eq(cell(j), period)}}, cell(j));
  };

  for (std::size_t q = 0; q < b.states.size(); ++q) {
    for (int p = 1; p <= n; ++p) {
      const std::string here = lba_state_name(b, q, p);
      bool any = false;
      for (std::size_t ti = 0; ti < b.transitions.size(); ++ti) {
        const auto& t = b.transitions[ti];
        const int dest = p + t.move;
        if (t.source != q || dest < 1 || dest > n) continue;
        any = true;
        // Post-write state, private to this transition.
        const std::string written = here + ".t" + std::to_string(ti);
        slot(here, written + ".h", written, {{eq(pace, t.write), eq(cell(p), period - t.read + t.write)}}, cell(p));
        copy_loops(written, p + 1, n);
        slot(written, written + ".s", lba_state_name(b, t.target, dest), {{eq(pace, k), eq(sep, period)}}, sep);
      }
      if (any) copy_loops(here, 1, p - 1);
    }
  }
  return a.build();
}

// -- Transforms --------------------------------------------------------------

TickAutomaton add_tick_clock(const TimedAutomaton& ta) {
  require_valid(ta);
  TickAutomaton out;
  out.automaton = ta;
  std::string z = "z";
  while (ta.find_clock(z)) z += "_";
  out.automaton.clock_names.push_back(z);
  const ClockIndex zi = out.automaton.num_clocks();

  std::set<std::string> labels;
  for (const auto& t : ta.transitions) labels.insert(t.label);
  for (const auto& t : ta.transitions) {
    Transition tick = t;
    tick.guard.atoms.push_back({zi, Relation::GreaterEq, 1});
    tick.resets.insert(zi);
    tick.label = t.label + "_tick";
    while (labels.count(tick.label)) tick.label += "_";
    labels.insert(tick.label);
    out.tick_labels.push_back(tick.label);
    out.automaton.transitions.push_back(std::move(tick));
  }
  require_valid(out.automaton);
  return out;
}

TimedAutomaton wrap_accept_loops(const TimedAutomaton& ta, const std::vector<std::string>& targets, LoopFlavor flavor,
                                 const std::string& clock) {
  if (targets.empty()) return ta;
  const auto x = ta.find_clock(clock);
  if (!x) throw std::invalid_argument("wrap_accept_loops: unknown clock " + clock);
  TimedAutomaton out = ta;
  std::set<std::string> labels;
  for (const auto& t : ta.transitions) labels.insert(t.label);
  for (const auto& name : targets) {
    const auto q = ta.find_state(name);
    if (!q) throw std::invalid_argument("wrap_accept_loops: unknown state " + name);
    Transition loop;
    loop.source = loop.target = *q;
    if (flavor == LoopFlavor::NonZeno) {
      loop.guard.atoms.push_back({*x, Relation::GreaterEq, 1});
      loop.resets.insert(*x);
    } else {
      loop.guard.atoms.push_back({*x, Relation::LessEq, 0});
    }
    loop.label = name + "/loop";
    while (labels.count(loop.label)) loop.label += "_";
    labels.insert(loop.label);
    out.transitions.push_back(std::move(loop));
  }
  return out;
}

}  // namespace zenokit
