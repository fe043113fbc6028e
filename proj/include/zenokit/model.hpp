#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zenokit/clock_set.hpp"
#include "zenokit/dbm.hpp"

namespace zenokit {

using StateId = std::uint32_t;

/// Largest guard constant accepted; keeps closure sums far from overflow.
inline constexpr std::int64_t kMaxConstant = std::int64_t{1} << 20;

enum class Relation { Less, LessEq, Equal, GreaterEq, Greater };

std::string_view to_string(Relation r);

/// x # c with x an automaton clock and c a natural number.
struct AtomicConstraint {
  ClockIndex clock = 1;
  Relation relation = Relation::LessEq;
  std::int64_t constant = 0;

  friend bool operator==(const AtomicConstraint&, const AtomicConstraint&) = default;
};

/// Conjunction of atoms; the empty guard is `true`.
struct Guard {
  std::vector<AtomicConstraint> atoms;

  bool is_true() const { return atoms.empty(); }
  friend bool operator==(const Guard&, const Guard&) = default;
};

struct Transition {
  StateId source = 0;
  Guard guard;
  ClockSet resets;
  StateId target = 0;
  std::string label;

  friend bool operator==(const Transition&, const Transition&) = default;
};

/// A timed automaton (Q, q0, X, T). Clock i (1-based) is named
/// clock_names[i-1]. States are indices into state_names.
struct TimedAutomaton {
  std::vector<std::string> state_names;
  StateId initial = 0;
  std::vector<std::string> clock_names;
  std::vector<Transition> transitions;

  ClockIndex num_clocks() const { return static_cast<ClockIndex>(clock_names.size()); }
  std::size_t num_states() const { return state_names.size(); }
  const std::string& clock_name(ClockIndex x) const { return clock_names.at(x - 1); }

  std::optional<StateId> find_state(std::string_view name) const;
  std::optional<ClockIndex> find_clock(std::string_view name) const;

  /// Indices of the transitions leaving `q`, in declaration order.
  std::vector<std::size_t> outgoing(StateId q) const;

  friend bool operator==(const TimedAutomaton&, const TimedAutomaton&) = default;
};

/// Incremental construction by name. Unknown names are created on first use
/// for clocks and states alike.
class AutomatonBuilder {
 public:
  StateId state(const std::string& name);
  ClockIndex clock(const std::string& name);
  AutomatonBuilder& initial(const std::string& name);
  AutomatonBuilder& transition(const std::string& label, const std::string& source, const std::string& target,
                               Guard guard = {}, const std::vector<std::string>& resets = {});
  AtomicConstraint atom(const std::string& clock, Relation r, std::int64_t c);

  TimedAutomaton build() const;

 private:
  TimedAutomaton ta_;
};

struct Diagnostic {
  std::string message;
};

/// Structural problems: undeclared states or clocks, duplicate labels or
/// names, missing initial state, out-of-range constants.
std::vector<Diagnostic> validate(const TimedAutomaton& ta);

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

/// Throws ValidationError when validate() reports anything.
void require_valid(const TimedAutomaton& ta);

// -- Bounds ------------------------------------------------------------------

/// Maximal constant, or nothing for -infinity.
using BoundValue = std::optional<std::int32_t>;

enum class ProfileKind { M, LU, WeakL, WeakU };

std::string_view to_string(ProfileKind k);

/// Per-clock lower (L) and upper (U) bounds. Index 0 is x0 and always 0.
struct BoundProfile {
  ProfileKind kind = ProfileKind::LU;
  std::vector<BoundValue> lower;
  std::vector<BoundValue> upper;

  ClockIndex num_clocks() const { return static_cast<ClockIndex>(lower.size() - 1); }
  /// Largest finite bound, 0 when all are -infinity.
  std::int32_t max_constant() const;

  friend bool operator==(const BoundProfile&, const BoundProfile&) = default;
};

BoundProfile compute_bound_profile(const TimedAutomaton& ta, ProfileKind kind);

/// Clocks appearing in a zero check x <= 0 or x == 0.
ClockSet relevant_clocks(const TimedAutomaton& ta);

/// Clocks appearing in an atom that implies x >= 1.
ClockSet lifted_clocks(const TimedAutomaton& ta);

/// Rewrites x == 0 into x <= 0 and drops x >= 0.
TimedAutomaton weaken_zero_checks(const TimedAutomaton& ta);

// -- Guard analysis ----------------------------------------------------------

/// DBM constraints equivalent to the guard.
std::vector<DifferenceConstraint> guard_constraints(const Guard& g);

/// Clocks x for which the guard implies x <= c for some c.
ClockSet bounded_clocks(const Guard& g);

/// Clocks x for which the guard implies x >= 1.
ClockSet lifting_clocks(const Guard& g);

bool is_zero_check(const AtomicConstraint& a);
bool is_lifting(const AtomicConstraint& a);

Dbm constrain(const Dbm& z, const Guard& g);

}  // namespace zenokit
