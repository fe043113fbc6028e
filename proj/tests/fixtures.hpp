#pragma once

#include <random>
#include <string>
#include <vector>

#include "zenokit/dbm.hpp"
#include "zenokit/extrapolation.hpp"
#include "zenokit/generators.hpp"
#include "zenokit/model.hpp"

namespace fixtures {

using namespace zenokit;

/// q0 -{x1}-> q1 -x1<=2-> q0, q0 -x2>5-> q2.
TimedAutomaton fig2();
/// q0 -{x1,x2}-> q1, loop x2==1 {x2} on q1.
TimedAutomaton a_inf();
/// States 1,2,3: loop x==0 {x} on 1; 1 -{y}-> 2; 2 -x>=1 {z}-> 3; 3 -z==0-> 2.
TimedAutomaton a_one();
/// q0 -{x1}-> q1 -x2<=0-> q0, q0 -{x2}-> q2 -x1<=0-> q0.
TimedAutomaton a_zeno();
/// Unguarded loop on q0; q0 -{x}-> q1 -x>=1-> q0.
TimedAutomaton fig10();
/// (p1 or not p2 or p3) and (not p1 or p2 or p3).
Formula example_formula();

/// ANZ for example_formula() with clause guards written x==0.
TimedAutomaton example_nz_with_equalities();

/// Random 3CNF with 1..max_vars variables and 0..max_clauses clauses.
Formula random_formula(std::mt19937& rng, int max_vars, int max_clauses);

/// Random automaton: 1..max_clocks clocks, 1..max_states states, up to
/// 2*max_states transitions, guards of 0..2 atoms with constants 0..max_const.
TimedAutomaton random_automaton(std::mt19937& rng, int max_clocks, int max_states, int max_const);

/// Random canonical non-empty zone of non-negative clocks.
Dbm random_zone(std::mt19937& rng, ClockIndex n, int max_const);

/// Random bound profile of the given kind for n clocks.
BoundProfile random_profile(std::mt19937& rng, ClockIndex n, ProfileKind kind, int max_const);

/// The fixed test corpus: 200 formulas (k<=4, n<=5) with their generated
/// automata, and 100 random automata (<=3 clocks, <=5 states, constants <=3).
struct Corpus {
  std::vector<Formula> formulas;
  std::vector<TimedAutomaton> random;
};
const Corpus& corpus();

/// Hand-written deterministic LBAs with the words to run them on.
struct LbaCase {
  std::string name;
  Lba machine;
  std::vector<std::vector<int>> words;
};
std::vector<LbaCase> lba_cases();

}  // namespace fixtures
