#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "zenokit/clock_set.hpp"
#include "zenokit/model.hpp"
#include "zenokit/zonegraph.hpp"

namespace zenokit {

/// Per-edge clock facts used by the blocking analysis.
struct EdgeLabel {
  ClockSet bounded;  // guard implies x <= c
  ClockSet reset;
  bool tau = false;
};
using EdgeLabels = std::vector<EdgeLabel>;

EdgeLabels edge_labels(const AnnotatedZoneGraph& g, const TimedAutomaton& ta);

/// A set of nodes with the edges running between them, both sorted.
struct Component {
  std::vector<std::size_t> nodes;
  std::vector<std::size_t> edges;
  bool trivial = true;  // no internal edge
};

/// Maximal SCCs of the whole graph, ordered by smallest node index.
std::vector<Component> sccs(const AnnotatedZoneGraph& g);

/// SCCs of the subgraph spanned by `nodes` and the listed edges (edges with
/// an endpoint outside `nodes` are ignored).
std::vector<Component> sccs(const AnnotatedZoneGraph& g, const std::vector<std::size_t>& nodes,
                            const std::vector<std::size_t>& edges);

/// Repeatedly drops edges bounding a clock the component never resets.
/// Returns the non-trivial components where bounded clocks are all reset.
std::vector<Component> prune_to_unblocked(const AnnotatedZoneGraph& g, const Component& scc, const EdgeLabels& labels);

/// Edge indices: a path from g.initial to the anchor, then a closed walk
/// from the anchor that uses every edge of the component.
struct Lasso {
  std::vector<std::size_t> prefix;
  std::vector<std::size_t> cycle;
};

/// Throws std::invalid_argument if the anchor is outside the component, the
/// component has no edge, or the anchor is unreachable from g.initial.
Lasso find_lasso(const AnnotatedZoneGraph& g, const Component& component, std::size_t anchor);

struct Witness {
  std::vector<std::string> prefix;
  std::vector<std::string> cycle;
};

Witness witness_labels(const AnnotatedZoneGraph& g, const TimedAutomaton& ta, const Lasso& lasso);

struct Verdict {
  bool answer = false;
  std::optional<Witness> witness;
  /// Size of the graph(s) explored to reach the answer.
  std::size_t nodes = 0;
  std::size_t edges = 0;
};

}  // namespace zenokit
