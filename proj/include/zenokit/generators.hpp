#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "zenokit/model.hpp"

namespace zenokit {

/// Variable index (1-based) and sign.
struct Literal {
  int variable = 1;
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

/// 3CNF over variables 1..num_vars.
struct Formula {
  int num_vars = 0;
  std::vector<std::array<Literal, 3>> clauses;

  friend bool operator==(const Formula&, const Formula&) = default;
};

/// Throws std::invalid_argument on an out-of-range variable.
void require_well_formed(const Formula& phi);

/// Clocks x1..xk and xb1..xbk (xb for the negated literal); states
/// q0..qk, r0..rn. Clause edges are guarded cl(l) <= 0.
TimedAutomaton gen_nz_automaton(const Formula& phi);

/// Same skeleton; clause edges are guarded cl(not l) >= 1.
TimedAutomaton gen_z_automaton(const Formula& phi);

/// Deterministic linear bounded automaton. Tape symbols are 1..k-1 and k is
/// the separator. Moves are -1, 0, +1.
struct LbaTransition {
  std::size_t source = 0;
  int read = 1;
  int write = 1;
  int move = 0;
  std::size_t target = 0;

  friend bool operator==(const LbaTransition&, const LbaTransition&) = default;
};

struct Lba {
  int k = 2;
  std::vector<std::string> states;
  std::size_t initial = 0;
  std::size_t accepting = 0;
  std::vector<LbaTransition> transitions;

  friend bool operator==(const Lba&, const Lba&) = default;
};

/// Throws std::invalid_argument on nondeterminism, transitions leaving the
/// accepting state, bad symbols or moves.
void require_valid(const Lba& b);

/// Throws std::invalid_argument unless w is non-empty over 1..k-1.
void require_valid_word(const Lba& b, const std::vector<int>& w);

/// Name of the automaton state standing for LBA state q with the head on p.
std::string lba_state_name(const Lba& b, std::size_t q, int p);

/// Timed automaton simulating b on w. Clock x paces each symbol over k+1
/// time units, x1..xn hold the cells and xs the separator. One pass over the
/// tape takes (n+1)(k+1).
TimedAutomaton gen_lba_automaton(const Lba& b, const std::vector<int>& w);

struct TickAutomaton {
  TimedAutomaton automaton;
  std::vector<std::string> tick_labels;
};

/// Duplicates each transition; the copy also requires a fresh clock to be
/// >= 1 and resets it.
TickAutomaton add_tick_clock(const TimedAutomaton& ta);

enum class LoopFlavor { NonZeno, Zeno };

/// Self-loops on the named states: x >= 1 with reset {x} for NonZeno,
/// x <= 0 without reset for Zeno. Throws std::invalid_argument on unknown
/// states or clock.
TimedAutomaton wrap_accept_loops(const TimedAutomaton& ta, const std::vector<std::string>& targets,
                                 LoopFlavor flavor, const std::string& clock = "x");

/// The (qF, p) states of gen_lba_automaton(b, w) for a word of length n.
std::vector<std::string> lba_accepting_states(const Lba& b, std::size_t n);

}  // namespace zenokit
