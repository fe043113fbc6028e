#pragma once

#include <cstddef>
#include <vector>

#include "zenokit/liveness.hpp"
#include "zenokit/zonegraph.hpp"

namespace zenokit {

/// (state, zone, guess set Y). Uses GraphNode with mode left Free.
using RgzgNode = GraphNode;

struct Successor {
  std::size_t transition = kTau;  // or kTau
  GraphNode node;
};

/// (q0, abs(Z0), Rl(A)).
RgzgNode rgzg_initial(const ZoneSemantics& sem);

/// Successors of a reduced guessing zone graph node. A transition fires only
/// if its guard is consistent with every clock outside Y being positive; the
/// tau move clearing Y exists only for Y non-empty.
std::vector<Successor> rgzg_successors(const ZoneSemantics& sem, const RgzgNode& n);
std::vector<Successor> rgzg_successors(const TimedAutomaton& ta, AbstractionKind kind, const RgzgNode& n);

AnnotatedZoneGraph build_rgzg(const TimedAutomaton& ta, AbstractionKind kind,
                              std::size_t node_limit = kDefaultNodeLimit);

/// YES iff some unblocked non-trivial component of the reachable graph holds
/// a clear node. The witness is anchored at the smallest such clear node.
/// Large graphs are checked at detail::Checkpoint intervals, so a YES may come
/// from part of the graph, and `nodes` then counts only that part.
Verdict check_nonzeno(const TimedAutomaton& ta, AbstractionKind kind, std::size_t node_limit = kDefaultNodeLimit);

}  // namespace zenokit
