#pragma once

#include <vector>

#include "surfgraph/error.hpp"
#include "surfgraph/ribbon_graph.hpp"

namespace surfgraph {

struct CycleStep {
  EdgeId edge = 0;
  bool forward = true;  // traversed along the reference orientation
  friend bool operator==(const CycleStep&, const CycleStep&) = default;
};

/// A closed walk with distinct edges, starting and ending at `start`.
struct Cycle {
  VertexId start = 0;
  std::vector<CycleStep> steps;

  std::vector<EdgeId> edges() const;
  /// +1/-1 per step: the traversal sign s(e) used in tension sums.
  int sign(std::size_t i) const { return steps[i].forward ? 1 : -1; }
};

/// (f0, e1, f1, …, ek, fk = f0): the dual of a cycle of G*. `steps[i].forward`
/// says the dual reference edge of e_{i+1} runs from faces[i] to faces[i+1];
/// equivalently the primal reference edge crosses the annulus from the left
/// boundary circle of the traversal to the right one. A cocycle is coherent
/// under an orientation iff o(e)·(forward ? 1 : -1) is the same on all edges.
struct Cocycle {
  std::vector<FaceId> faces;  // k+1 entries, back() == front()
  std::vector<CycleStep> steps;

  std::vector<EdgeId> edges() const;
  int crossing(std::size_t i) const { return steps[i].forward ? 1 : -1; }
};

/// Vertices visited by a cycle, start included once. Throws InvalidCycle if
/// the steps are not a closed walk with distinct valid edges.
std::vector<VertexId> validate_closed_trail(const RibbonGraph& g, const Cycle& c);

/// All simple cycles of the underlying abstract graph: loops, 2-cycles of
/// parallel edges and longer ones, each listed once in one direction.
/// Throws TooLarge beyond limits.max_orientation_edges edges.
std::vector<Cycle> cycles(const RibbonGraph& g, const Limits& limits = default_limits());

/// Cycles of dual(g), written as face/edge sequences of g.
std::vector<Cocycle> cocycles(const RibbonGraph& g, const Limits& limits = default_limits());

/// One cycle per non-tree edge of a breadth-first spanning forest:
/// |E| − |V| + c cycles generating the cycle space.
std::vector<Cycle> fundamental_cycles(const RibbonGraph& g);

/// c(G/edges(c)) = c(G) + 1. Accepts any closed trail. Throws InvalidCycle.
bool is_separating(const RibbonGraph& g, const Cycle& c);

}  // namespace surfgraph
