#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "zenokit/dbm.hpp"
#include "zenokit/extrapolation.hpp"
#include "zenokit/model.hpp"

namespace zenokit {

inline constexpr std::size_t kDefaultNodeLimit = 1'000'000;

/// Edge label for the auxiliary tau moves of the annotated graphs.
inline constexpr std::size_t kTau = std::numeric_limits<std::size_t>::max();

enum class AnnotationKind { Plain, GuessSet, Mode };
enum class Mode { Free, Slow };

/// Exploration stopped because the graph outgrew its node limit.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(std::size_t limit);
  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

/// (state, zone) of the abstract zone graph.
struct ZgNode {
  StateId state = 0;
  Dbm zone;

  friend bool operator==(const ZgNode&, const ZgNode&) = default;
};

/// A node of any of the explored graphs. `guess` is meaningful for guess-set
/// graphs and `mode` for slow zone graphs; both stay default otherwise, so
/// identity is always state + zone + annotation.
struct GraphNode {
  StateId state = 0;
  Dbm zone;
  ClockSet guess;
  Mode mode = Mode::Free;

  bool is_clear() const { return guess.empty(); }
  friend bool operator==(const GraphNode&, const GraphNode&) = default;
};

struct GraphEdge {
  std::size_t source = 0;
  std::size_t target = 0;
  /// Automaton transition index, or kTau.
  std::size_t transition = kTau;

  bool is_tau() const { return transition == kTau; }
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

struct AnnotatedZoneGraph {
  AnnotationKind annotation = AnnotationKind::Plain;
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;
  std::size_t initial = 0;

  /// Edge indices leaving each node, in insertion order.
  std::vector<std::vector<std::size_t>> out_edges() const;
};

/// The automaton together with one abstraction: initial node and abstract
/// action-then-delay successors.
class ZoneSemantics {
 public:
  ZoneSemantics(const TimedAutomaton& ta, AbstractionKind kind);

  const TimedAutomaton& automaton() const { return *ta_; }
  AbstractionKind kind() const { return kind_; }
  const BoundProfile& bounds() const { return bounds_; }

  /// (q0, abs(up(origin))).
  ZgNode initial() const;

  /// Z' = up(reset(Z and g, R)); returns (target, abs(Z')) or nothing when
  /// the guard disables the transition.
  std::optional<ZgNode> post(const ZgNode& n, const Transition& t) const;

  Dbm abstract(const Dbm& z) const { return extrapolate_canonical(kind_, z, bounds_); }

  /// Same as post, split at the guard so callers can inspect Z and g.
  Dbm guarded(const Dbm& z, std::size_t t) const { return constrain(z, std::span<const DifferenceConstraint>(guards_[t])); }
  ZgNode advance(Dbm guarded, std::size_t t) const;

  /// Transition indices leaving q, in declaration order.
  const std::vector<std::size_t>& outgoing(StateId q) const { return outgoing_[q]; }
  ClockSet relevant() const { return relevant_; }

 private:
  const TimedAutomaton* ta_;
  AbstractionKind kind_;
  BoundProfile bounds_;
  std::vector<std::vector<DifferenceConstraint>> guards_;
  std::vector<std::vector<std::size_t>> outgoing_;
  ClockSet relevant_;
};

ZgNode initial(const TimedAutomaton& ta, AbstractionKind kind);
std::optional<ZgNode> post(const TimedAutomaton& ta, AbstractionKind kind, const ZgNode& n, const Transition& t);

/// Breadth-first construction of the reachable abstract zone graph. Nodes are
/// numbered in discovery order, successors in transition declaration order.
AnnotatedZoneGraph explore(const TimedAutomaton& ta, AbstractionKind kind, std::size_t node_limit = kDefaultNodeLimit);

namespace detail {

struct GraphNodeHash {
  std::size_t operator()(const GraphNode& n) const noexcept {
    std::size_t h = n.zone.hash();
    h ^= std::hash<std::uint64_t>{}((std::uint64_t{n.state} << 8) ^ n.guess.bits() * 31 ^
                                    static_cast<std::uint64_t>(n.mode)) +
         0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

/// Called with the graph built so far once the number of expanded nodes
/// reaches kFirstCheckpoint, then each time it doubles. Returning true stops
/// the search. Nodes not yet expanded have no outgoing edges, so every cycle
/// seen at a checkpoint is also a cycle of the full graph.
using Checkpoint = std::function<bool(const AnnotatedZoneGraph&)>;
inline constexpr std::size_t kFirstCheckpoint = 256;

/// Breadth expands nodes in discovery order. Depth expands the most recently
/// discovered node first, which closes cycles sooner on wide graphs.
enum class ExploreOrder { Breadth, Depth };

/// Generic deduplicating search. `successors(node, emit)` must call
/// emit(transition_or_tau, successor) for each outgoing edge. Nodes are
/// numbered in discovery order either way.
template <typename Successors>
AnnotatedZoneGraph explore_graph(AnnotationKind annotation, GraphNode root, Successors&& successors,
                                 std::size_t node_limit, const Checkpoint& checkpoint = {},
                                 ExploreOrder order = ExploreOrder::Breadth) {
  AnnotatedZoneGraph g;
  g.annotation = annotation;
  // Open addressing over node indices; slot value 0 means empty.
  std::vector<std::uint32_t> slots(1024, 0);
  std::vector<std::size_t> hashes;
  auto slot_of = [&](std::size_t h) {
    h ^= h >> 31;
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 29;
    return h & (slots.size() - 1);
  };
  auto grow = [&] {
    slots.assign(slots.size() * 2, 0);
    for (std::size_t v = 0; v < hashes.size(); ++v) {
      std::size_t s = slot_of(hashes[v]);
      while (slots[s] != 0) s = (s + 1) & (slots.size() - 1);
      slots[s] = static_cast<std::uint32_t>(v + 1);
    }
  };
  auto intern = [&](GraphNode&& n) -> std::size_t {
    const std::size_t h = GraphNodeHash{}(n);
    for (std::size_t s = slot_of(h);; s = (s + 1) & (slots.size() - 1)) {
      const std::uint32_t v = slots[s];
      if (v == 0) {
        if (g.nodes.size() >= node_limit || g.nodes.size() >= std::numeric_limits<std::uint32_t>::max() - 1)
          throw ResourceLimitError(node_limit);
        slots[s] = static_cast<std::uint32_t>(g.nodes.size() + 1);
        hashes.push_back(h);
        g.nodes.push_back(std::move(n));
        if (2 * g.nodes.size() > slots.size()) grow();
        return g.nodes.size() - 1;
      }
      if (hashes[v - 1] == h && g.nodes[v - 1] == n) return v - 1;
    }
  };
  g.initial = intern(std::move(root));
  std::size_t next_checkpoint = kFirstCheckpoint;
  std::size_t discovered = 1;  // Depth: nodes below this index are on the stack or done
  std::vector<std::size_t> stack{g.initial};
  for (std::size_t expanded = 0;; ++expanded) {
    std::size_t cur;
    if (order == ExploreOrder::Breadth) {
      if (expanded == g.nodes.size()) break;
      cur = expanded;
    } else {
      if (stack.empty()) break;
      cur = stack.back();
      stack.pop_back();
    }
    // Copied because emit may reallocate g.nodes.
    const GraphNode node = g.nodes[cur];
    successors(node, [&](std::size_t transition, GraphNode next) {
      const std::size_t target = intern(std::move(next));
      g.edges.push_back({cur, target, transition});
    });
    if (order == ExploreOrder::Depth)
      for (; discovered < g.nodes.size(); ++discovered) stack.push_back(discovered);
    if (checkpoint && expanded + 1 == next_checkpoint && expanded + 1 < g.nodes.size()) {
      if (checkpoint(g)) return g;
      next_checkpoint *= 2;
    }
  }
  return g;
}

/// explore() with an optional early stop.
AnnotatedZoneGraph explore_zg(const ZoneSemantics& sem, std::size_t node_limit, const Checkpoint& checkpoint = {},
                              ExploreOrder order = ExploreOrder::Breadth);

}  // namespace detail

/// Edge label: the transition label, or "tau".
std::string edge_label(const TimedAutomaton& ta, const GraphEdge& e);

/// Non-redundant constraint list for display, e.g. "x1-x2==1 && x2>=0".
std::string describe_zone(const Dbm& z, const std::vector<std::string>& clock_names);

/// Graphviz rendering with node labels `state | zone | annotation`.
void write_dot(std::ostream& os, const AnnotatedZoneGraph& g, const TimedAutomaton& ta);

}  // namespace zenokit
