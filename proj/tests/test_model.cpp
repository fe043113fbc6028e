#include <doctest.h>

#include "fixtures.hpp"
#include "zenokit/model.hpp"

using namespace zenokit;

namespace {

ClockSet clocks(const TimedAutomaton& ta, std::initializer_list<const char*> names) {
  ClockSet s;
  for (const char* n : names) s.insert(*ta.find_clock(n));
  return s;
}

// Independent scan: lower(x) from >, >=, ==; upper(x) from <, <=, ==.
std::pair<std::vector<BoundValue>, std::vector<BoundValue>> scan_lu(const TimedAutomaton& ta) {
  std::vector<BoundValue> lo(ta.num_clocks() + 1), hi(ta.num_clocks() + 1);
  lo[0] = hi[0] = 0;
  auto bump = [](BoundValue& v, std::int64_t c) {
    if (!v || *v < c) v = static_cast<std::int32_t>(c);
  };
  for (const auto& t : ta.transitions)
    for (const auto& a : t.guard.atoms) {
      if (a.relation == Relation::Greater || a.relation == Relation::GreaterEq || a.relation == Relation::Equal)
        bump(lo[a.clock], a.constant);
      if (a.relation == Relation::Less || a.relation == Relation::LessEq || a.relation == Relation::Equal)
        bump(hi[a.clock], a.constant);
    }
  return {lo, hi};
}

}  // namespace

TEST_CASE("builder and validation") {
  const TimedAutomaton a1 = fixtures::a_one();
  CHECK(a1.num_states() == 3);
  CHECK(a1.num_clocks() == 3);
  CHECK(a1.transitions.size() == 4);
  CHECK(validate(a1).empty());
  CHECK(a1.outgoing(0) == std::vector<std::size_t>{0, 1});

  TimedAutomaton bad = a1;
  bad.transitions[0].target = 9;
  auto d = validate(bad);
  REQUIRE(d.size() == 1);
  CHECK(d[0].message.find("9") != std::string::npos);

  bad = a1;
  bad.transitions[1].label = "zero";
  d = validate(bad);
  REQUIRE(d.size() == 1);
  CHECK(d[0].message.find("'zero'") != std::string::npos);
  CHECK_THROWS_AS(require_valid(bad), ValidationError);

  bad = a1;
  bad.initial = 3;
  CHECK(validate(bad).size() == 1);

  bad = a1;
  bad.transitions[0].guard.atoms[0].constant = kMaxConstant + 1;
  CHECK(validate(bad).size() == 1);

  bad = a1;
  bad.transitions[0].resets.insert(4);
  CHECK(validate(bad).size() == 1);

  CHECK(validate(TimedAutomaton{}).size() == 1);
}

TEST_CASE("bound profiles of the fixture automata") {
  const TimedAutomaton a1 = fixtures::a_one();
  const ClockIndex x = *a1.find_clock("x"), y = *a1.find_clock("y"), z = *a1.find_clock("z");
  const BoundProfile lu = compute_bound_profile(a1, ProfileKind::LU);
  CHECK(lu.lower[x] == 1);
  CHECK(lu.upper[x] == 0);
  CHECK(lu.lower[z] == 0);
  CHECK(lu.upper[z] == 0);
  CHECK_FALSE(lu.lower[y].has_value());
  CHECK_FALSE(lu.upper[y].has_value());
  CHECK(lu.lower[0] == 0);
  CHECK(lu.upper[0] == 0);

  const TimedAutomaton anz = gen_nz_automaton(fixtures::example_formula());
  const BoundProfile anz_lu = compute_bound_profile(anz, ProfileKind::LU);
  const BoundProfile anz_weak_l = compute_bound_profile(anz, ProfileKind::WeakL);
  const ClockSet checked = relevant_clocks(anz);
  for (ClockIndex c = 1; c <= anz.num_clocks(); ++c) {
    CHECK_FALSE(anz_lu.lower[c].has_value());
    CHECK(anz_lu.upper[c] == (checked.contains(c) ? BoundValue{0} : std::nullopt));
    CHECK(anz_weak_l.lower[c] == (checked.contains(c) ? BoundValue{0} : std::nullopt));
  }

  const TimedAutomaton az = gen_z_automaton(fixtures::example_formula());
  const BoundProfile az_lu = compute_bound_profile(az, ProfileKind::LU);
  const BoundProfile az_weak_u = compute_bound_profile(az, ProfileKind::WeakU);
  const ClockSet lifted = lifted_clocks(az);
  for (ClockIndex c = 1; c <= az.num_clocks(); ++c) {
    CHECK(az_lu.lower[c] == (lifted.contains(c) ? BoundValue{1} : std::nullopt));
    CHECK_FALSE(az_lu.upper[c].has_value());
    CHECK(az_weak_u.upper[c] == (lifted.contains(c) ? BoundValue{1} : std::nullopt));
  }
}

TEST_CASE("LU profile matches an independent guard scan") {
  const auto& corpus = fixtures::corpus();
  for (const auto& ta : corpus.random) {
    const auto [lo, hi] = scan_lu(ta);
    const BoundProfile p = compute_bound_profile(ta, ProfileKind::LU);
    CHECK(p.lower == lo);
    CHECK(p.upper == hi);
  }
}

TEST_CASE("profile monotonicity across kinds") {
  auto ge = [](const BoundValue& a, const BoundValue& b) { return !b || (a && *a >= *b); };
  const auto& corpus = fixtures::corpus();
  std::vector<TimedAutomaton> all = corpus.random;
  for (const auto& phi : corpus.formulas) {
    all.push_back(gen_nz_automaton(phi));
    all.push_back(gen_z_automaton(phi));
  }
  for (const auto& ta : all) {
    const auto lu = compute_bound_profile(ta, ProfileKind::LU);
    const auto m = compute_bound_profile(ta, ProfileKind::M);
    const auto wl = compute_bound_profile(ta, ProfileKind::WeakL);
    const auto wu = compute_bound_profile(ta, ProfileKind::WeakU);
    for (ClockIndex x = 0; x <= ta.num_clocks(); ++x) {
      CHECK(ge(wl.lower[x], lu.lower[x]));
      CHECK(wl.upper[x] == lu.upper[x]);
      CHECK(ge(wu.upper[x], lu.upper[x]));
      CHECK(wu.lower[x] == lu.lower[x]);
      CHECK(m.lower[x] == m.upper[x]);
      const BoundValue mx = !lu.lower[x] ? lu.upper[x] : !lu.upper[x] ? lu.lower[x]
                                                                      : std::max(*lu.lower[x], *lu.upper[x]);
      CHECK(m.lower[x] == mx);
    }
  }
}

TEST_CASE("weak profiles coincide with LU without zero checks or unbounded lifts") {
  AutomatonBuilder b;
  b.state("p");
  b.initial("p");
  b.transition("t", "p", "p", Guard{{b.atom("x", Relation::GreaterEq, 2), b.atom("x", Relation::Less, 3)}}, {"x"});
  b.transition("u", "p", "p", Guard{{b.atom("y", Relation::Greater, 1), b.atom("y", Relation::LessEq, 4)}});
  const TimedAutomaton ta = b.build();
  const auto lu = compute_bound_profile(ta, ProfileKind::LU);
  auto same = [&](BoundProfile p) {
    p.kind = ProfileKind::LU;
    return p == lu;
  };
  CHECK(same(compute_bound_profile(ta, ProfileKind::WeakL)));
  CHECK(same(compute_bound_profile(ta, ProfileKind::WeakU)));
}

TEST_CASE("relevant and lifted clocks") {
  const TimedAutomaton a1 = fixtures::a_one();
  CHECK(relevant_clocks(a1) == clocks(a1, {"x", "z"}));
  CHECK(lifted_clocks(a1) == clocks(a1, {"x"}));

  const TimedAutomaton anz = gen_nz_automaton(fixtures::example_formula());
  // No clause of the example formula holds the literal not-p3.
  CHECK(relevant_clocks(anz) == clocks(anz, {"x1", "xb1", "x2", "xb2", "x3"}));
  const TimedAutomaton az = gen_z_automaton(fixtures::example_formula());
  CHECK(lifted_clocks(az) == clocks(az, {"x1", "xb1", "x2", "xb2", "xb3"}));
  CHECK(relevant_clocks(fixtures::a_inf()).empty());

  Guard g{{AtomicConstraint{1, Relation::Greater, 0}}};
  CHECK(lifting_clocks(g).empty());
  g.atoms[0].constant = 1;
  CHECK(lifting_clocks(g).contains(1));
  g.atoms[0] = {1, Relation::Equal, 1};
  CHECK(lifting_clocks(g).contains(1));
  CHECK(bounded_clocks(g).contains(1));
  g.atoms[0] = {1, Relation::LessEq, 0};
  CHECK(bounded_clocks(g).contains(1));
  CHECK(is_zero_check(g.atoms[0]));
}

TEST_CASE("weaken_zero_checks") {
  AutomatonBuilder b;
  b.state("p");
  b.initial("p");
  b.transition("t", "p", "p",
               Guard{{b.atom("x", Relation::Equal, 0), b.atom("y", Relation::GreaterEq, 0),
                      b.atom("y", Relation::LessEq, 2)}});
  const TimedAutomaton ta = b.build();
  const TimedAutomaton w = weaken_zero_checks(ta);
  CHECK(w.transitions[0].guard.atoms ==
        std::vector<AtomicConstraint>{{1, Relation::LessEq, 0}, {2, Relation::LessEq, 2}});

  CHECK(weaken_zero_checks(fixtures::a_inf()) == fixtures::a_inf());
  CHECK(weaken_zero_checks(fixtures::example_nz_with_equalities()) == gen_nz_automaton(fixtures::example_formula()));

  for (const auto& a : fixtures::corpus().random) {
    const TimedAutomaton once = weaken_zero_checks(a);
    CHECK(weaken_zero_checks(once) == once);
    CHECK(relevant_clocks(once) == relevant_clocks(a));
    CHECK(lifted_clocks(once) == lifted_clocks(a));
  }
}

TEST_CASE("guard constraints denote the guard") {
  const Dbm all = up(Dbm::origin(1));
  auto sat = [&](Relation r, std::int64_t c, std::int32_t v, bool strict_above) {
    // Is there a point of the guard at v (or just above v when strict_above)?
    Guard g{{AtomicConstraint{1, r, c}}};
    const Dbm z = constrain(all, g);
    if (strict_above) return consistent_with(z, {clock_gt(1, v), clock_lt(1, v + 1)});
    return consistent_with(z, {clock_le(1, v), clock_ge(1, v)});
  };
  CHECK(sat(Relation::LessEq, 2, 2, false));
  CHECK_FALSE(sat(Relation::Less, 2, 2, false));
  CHECK(sat(Relation::Equal, 2, 2, false));
  CHECK_FALSE(sat(Relation::Equal, 2, 2, true));
  CHECK(sat(Relation::Greater, 2, 2, true));
  CHECK_FALSE(sat(Relation::Greater, 2, 2, false));
  CHECK(sat(Relation::GreaterEq, 2, 2, false));
}
