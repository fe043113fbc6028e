#include "fixtures.hpp"

namespace fixtures {

namespace {
Guard guard(std::initializer_list<AtomicConstraint> atoms) { return Guard{atoms}; }
}  // namespace

TimedAutomaton fig2() {
  AutomatonBuilder b;
  b.state("q0");
  b.state("q1");
  b.state("q2");
  b.clock("x1");
  b.clock("x2");
  b.initial("q0");
  b.transition("a", "q0", "q1", {}, {"x1"});
  b.transition("b", "q1", "q0", guard({b.atom("x1", Relation::LessEq, 2)}));
  b.transition("c", "q0", "q2", guard({b.atom("x2", Relation::Greater, 5)}));
  return b.build();
}

TimedAutomaton a_inf() {
  AutomatonBuilder b;
  b.state("q0");
  b.state("q1");
  b.clock("x1");
  b.clock("x2");
  b.initial("q0");
  b.transition("a", "q0", "q1", {}, {"x1", "x2"});
  b.transition("b", "q1", "q1", guard({b.atom("x2", Relation::Equal, 1)}), {"x2"});
  return b.build();
}

TimedAutomaton a_one() {
  AutomatonBuilder b;
  b.state("1");
  b.state("2");
  b.state("3");
  b.clock("x");
  b.clock("y");
  b.clock("z");
  b.initial("1");
  b.transition("zero", "1", "1", guard({b.atom("x", Relation::Equal, 0)}), {"x"});
  b.transition("ry", "1", "2", {}, {"y"});
  b.transition("lift", "2", "3", guard({b.atom("x", Relation::GreaterEq, 1)}), {"z"});
  b.transition("check", "3", "2", guard({b.atom("z", Relation::Equal, 0)}));
  return b.build();
}

TimedAutomaton a_zeno() {
  AutomatonBuilder b;
  b.state("q0");
  b.state("q1");
  b.state("q2");
  b.clock("x1");
  b.clock("x2");
  b.initial("q0");
  b.transition("r1", "q0", "q1", {}, {"x1"});
  b.transition("r2", "q0", "q2", {}, {"x2"});
  b.transition("c2", "q1", "q0", guard({b.atom("x2", Relation::LessEq, 0)}));
  b.transition("c1", "q2", "q0", guard({b.atom("x1", Relation::LessEq, 0)}));
  return b.build();
}

TimedAutomaton fig10() {
  AutomatonBuilder b;
  b.state("q0");
  b.state("q1");
  b.clock("x");
  b.initial("q0");
  b.transition("loop", "q0", "q0");
  b.transition("reset", "q0", "q1", {}, {"x"});
  b.transition("lift", "q1", "q0", guard({b.atom("x", Relation::GreaterEq, 1)}));
  return b.build();
}

Formula example_formula() {
  Formula phi;
  phi.num_vars = 3;
  phi.clauses.push_back({Literal{1, true}, Literal{2, false}, Literal{3, true}});
  phi.clauses.push_back({Literal{1, false}, Literal{2, true}, Literal{3, true}});
  return phi;
}

TimedAutomaton example_nz_with_equalities() {
  TimedAutomaton ta = gen_nz_automaton(example_formula());
  for (auto& t : ta.transitions)
    for (auto& a : t.guard.atoms)
      if (a.relation == Relation::LessEq && a.constant == 0) a.relation = Relation::Equal;
  return ta;
}

Formula random_formula(std::mt19937& rng, int max_vars, int max_clauses) {
  Formula phi;
  phi.num_vars = std::uniform_int_distribution<int>(1, max_vars)(rng);
  const int n = std::uniform_int_distribution<int>(0, max_clauses)(rng);
  std::uniform_int_distribution<int> var(1, phi.num_vars);
  std::bernoulli_distribution sign(0.5);
  for (int m = 0; m < n; ++m) {
    std::array<Literal, 3> c;
    for (auto& l : c) l = {var(rng), sign(rng)};
    phi.clauses.push_back(c);
  }
  return phi;
}

TimedAutomaton random_automaton(std::mt19937& rng, int max_clocks, int max_states, int max_const) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  TimedAutomaton ta;
  const int states = pick(1, max_states);
  const int clocks = pick(1, max_clocks);
  for (int q = 0; q < states; ++q) ta.state_names.push_back("s" + std::to_string(q));
  for (int x = 1; x <= clocks; ++x) ta.clock_names.push_back("c" + std::to_string(x));
  const int transitions = pick(1, 2 * states);
  for (int t = 0; t < transitions; ++t) {
    Transition tr;
    tr.label = "t" + std::to_string(t);
    tr.source = static_cast<StateId>(pick(0, states - 1));
    tr.target = static_cast<StateId>(pick(0, states - 1));
    const int atoms = pick(0, 2);
    for (int a = 0; a < atoms; ++a) {
      AtomicConstraint atom;
      atom.clock = static_cast<ClockIndex>(pick(1, clocks));
      if (pick(0, 3) == 0) {
        atom.relation = pick(0, 1) ? Relation::LessEq : Relation::Equal;
        atom.constant = 0;
      } else {
        atom.relation = static_cast<Relation>(pick(0, 4));
        atom.constant = pick(0, max_const);
      }
      tr.guard.atoms.push_back(atom);
    }
    for (int x = 1; x <= clocks; ++x)
      if (pick(0, 2) == 0) tr.resets.insert(static_cast<ClockIndex>(x));
    ta.transitions.push_back(std::move(tr));
  }
  require_valid(ta);
  return ta;
}

Dbm random_zone(std::mt19937& rng, ClockIndex n, int max_const) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (;;) {
    Dbm z = Dbm::from_bounds(n, [&](ClockIndex i, ClockIndex j) {
      if (i == j) return Bound::zero();
      if (i == 0) {
        const int c = pick(-max_const, 0);
        return pick(0, 1) ? Bound::strict(c) : Bound::weak(c);
      }
      if (pick(0, 2) == 0) return Bound::infinity();
      const int c = pick(j == 0 ? 0 : -max_const, max_const);
      return pick(0, 1) ? Bound::strict(c) : Bound::weak(c);
    });
    z = canonicalize(std::move(z));
    if (!is_empty(z)) return z;
  }
}

BoundProfile random_profile(std::mt19937& rng, ClockIndex n, ProfileKind kind, int max_const) {
  auto value = [&]() -> BoundValue {
    const int v = std::uniform_int_distribution<int>(-1, max_const)(rng);
    return v < 0 ? BoundValue{} : BoundValue{v};
  };
  BoundProfile p;
  p.kind = kind;
  p.lower.assign(n + 1, std::nullopt);
  p.upper.assign(n + 1, std::nullopt);
  p.lower[0] = p.upper[0] = 0;
  for (ClockIndex x = 1; x <= n; ++x) {
    p.lower[x] = value();
    p.upper[x] = kind == ProfileKind::M ? p.lower[x] : value();
  }
  return p;
}

const Corpus& corpus() {
  static const Corpus c = [] {
    Corpus out;
    std::mt19937 rng(20240601);
    for (int i = 0; i < 200; ++i) out.formulas.push_back(random_formula(rng, 4, 5));
    for (int i = 0; i < 100; ++i) out.random.push_back(random_automaton(rng, 3, 5, 3));
    return out;
  }();
  return c;
}

namespace {

Lba machine(int k, std::vector<std::string> states, std::size_t initial, std::size_t accepting,
            std::vector<LbaTransition> transitions) {
  Lba b{k, std::move(states), initial, accepting, std::move(transitions)};
  require_valid(b);
  return b;
}

std::vector<std::vector<int>> all_words(int k, std::size_t max_len) {
  std::vector<std::vector<int>> out, layer{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : layer)
      for (int s = 1; s < k; ++s) {
        auto v = w;
        v.push_back(s);
        next.push_back(v);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<LbaCase> lba_cases() {
  std::vector<LbaCase> out;
  // States: index 0 is initial; the accepting state is named qf.
  out.push_back({"first-is-one", machine(3, {"q0", "qf"}, 0, 1, {{0, 1, 1, 0, 1}}), all_words(3, 3)});
  out.push_back({"find-two", machine(3, {"q0", "qf"}, 0, 1, {{0, 1, 1, +1, 0}, {0, 2, 2, 0, 1}}), all_words(3, 3)});
  out.push_back({"spin-on-one",
                 machine(3, {"q0", "q1", "qf"}, 0, 2, {{0, 1, 1, 0, 1}, {1, 1, 1, 0, 0}, {0, 2, 2, 0, 2}}),
                 all_words(3, 3)});
  out.push_back({"mark-and-return",
                 machine(3, {"q0", "q1", "q2", "qf"}, 0, 3,
                         {{0, 1, 2, +1, 1}, {1, 1, 1, -1, 2}, {1, 2, 2, -1, 2}, {2, 2, 2, 0, 3}}),
                 all_words(3, 3)});
  out.push_back({"even-ones-then-two",
                 machine(3, {"q0", "q1", "qf"}, 0, 2, {{0, 1, 1, +1, 1}, {1, 1, 1, +1, 0}, {0, 2, 2, 0, 2}}),
                 all_words(3, 3)});
  out.push_back({"count-up-in-place",
                 machine(4, {"q0", "qf"}, 0, 1, {{0, 1, 2, 0, 0}, {0, 2, 3, 0, 0}, {0, 3, 3, 0, 1}}),
                 all_words(4, 2)});
  return out;
}

}  // namespace fixtures
