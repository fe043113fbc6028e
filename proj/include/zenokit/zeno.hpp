#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "zenokit/liveness.hpp"
#include "zenokit/nonzeno.hpp"
#include "zenokit/zonegraph.hpp"

namespace zenokit {

/// The slow zone graph was requested for a kind that is not lift-safe.
class UnsupportedAbstractionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// (state, zone, mode). Uses GraphNode with an empty guess set.
using SzgNode = GraphNode;

/// Free nodes: all zone graph successors plus tau to the slow twin. Slow
/// nodes: only transitions whose reset clocks can all still be below 1.
std::vector<Successor> szg_successors(const ZoneSemantics& sem, const SzgNode& n);
std::vector<Successor> szg_successors(const TimedAutomaton& ta, AbstractionKind kind, const SzgNode& n);

AnnotatedZoneGraph build_szg(const TimedAutomaton& ta, AbstractionKind kind, std::size_t node_limit = kDefaultNodeLimit);

/// YES iff the slow part of the slow zone graph has a non-trivial SCC.
Verdict check_zeno_liftsafe(const TimedAutomaton& ta, AbstractionKind kind,
                            std::size_t node_limit = kDefaultNodeLimit);

/// Tries every W of lifted clocks, smallest first. Edges are kept when each
/// lifted clock is in W and no reset clock is; YES on the first W whose
/// restriction of the zone graph has a non-trivial SCC.
Verdict check_zeno_general(const TimedAutomaton& ta, AbstractionKind kind,
                           std::size_t node_limit = kDefaultNodeLimit);

/// Like check_nonzeno, both checks may answer YES before the whole graph is
/// built.
Verdict check_zeno(const TimedAutomaton& ta, AbstractionKind kind, std::size_t node_limit = kDefaultNodeLimit);

/// Subsets of `s` by ascending size, then ascending bit pattern.
std::vector<ClockSet> subsets_by_size(ClockSet s);

}  // namespace zenokit
