#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "zenokit/extrapolation.hpp"
#include "zenokit/generators.hpp"
#include "zenokit/zonegraph.hpp"

namespace zenokit {

inline constexpr int kMaxSatVariables = 20;

/// Brute force over all 2^k assignments. Throws std::invalid_argument for
/// k > 20.
bool sat_enumerate(const Formula& phi);

/// Adds a tick clock and searches ZG^M of the result for an SCC containing
/// a tick edge.
bool nonzeno_via_tick(const TimedAutomaton& ta, std::size_t node_limit = kDefaultNodeLimit);

enum class LbaOutcome { Accept, Reject, Timeout };

std::string_view to_string(LbaOutcome o);

/// Direct tape simulation. Falling off the tape or getting stuck rejects.
LbaOutcome simulate_lba(const Lba& b, const std::vector<int>& w, std::size_t step_limit);

enum class Property { NonZeno, Zeno };

std::string_view to_string(Property p);
std::optional<Property> parse_property(std::string_view name);

struct CrossCheckRow {
  std::string name;  // abstraction name, or "tick"
  std::optional<bool> verdict;
  std::size_t nodes = 0;
  std::string error;
};

struct CrossCheckReport {
  Property property = Property::NonZeno;
  std::vector<CrossCheckRow> rows;
  /// All rows that produced a verdict produced the same one.
  bool agree = true;

  /// Aligned table followed by one `kind=... verdict=... nodes=...` line per row
  /// and a final `agree=yes|no`.
  std::string render() const;
};

/// Runs the property under each kind, plus the tick oracle for nonzeno.
/// Per-kind failures are recorded in the row.
CrossCheckReport cross_check(const TimedAutomaton& ta, Property property, const std::vector<AbstractionKind>& kinds,
                             std::size_t node_limit = kDefaultNodeLimit);

}  // namespace zenokit
