#pragma once

#include <span>
#include <utility>
#include <vector>

#include "surfgraph/ribbon_graph.hpp"

namespace surfgraph {

using EdgeSet = std::vector<EdgeId>;
using FaceSet = std::vector<FaceId>;

/// Exchanges vertices and faces. The dual keeps the darts and the edge
/// pairs (hence the reference orientation); its rotation is phi = sigma∘alpha.
/// Vertex v of the dual is face v of `g`. dual(dual(g)) is dart-identical to g.
RibbonGraph dual(const RibbonGraph& g);

/// Removes the edges in `removed` (order and repeats irrelevant). Remaining
/// darts and edges are renumbered in increasing order; vertices are kept,
/// including ones left isolated. Throws UnknownEdge.
RibbonGraph delete_edges(const RibbonGraph& g, std::span<const EdgeId> removed);

/// Ribbon-graph contraction, computed as (G*∖A)*. Works for loops and
/// non-loops alike; contracting a loop may split its vertex.
RibbonGraph contract_edges(const RibbonGraph& g, std::span<const EdgeId> contracted);

/// Processes `order` edge by edge: an edge whose two sides lie in one face
/// of the current graph is contracted, any other edge is deleted.
/// Throws UnknownEdge, DuplicateEdge.
RibbonGraph double_slash(const RibbonGraph& g, std::span<const EdgeId> order);

/// For a sorted-or-not removed set, maps every original edge id to its id
/// after removal (or -1 if removed).
std::vector<EdgeId> surviving_edge_ids(int edge_count, std::span<const EdgeId> removed);

/// The underlying abstract multigraph (loops and parallel edges allowed).
struct AbstractGraph {
  int vertex_count = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;  // (tail, head) per reference orientation

  int edge_count() const { return static_cast<int>(edges.size()); }
  int component_count() const;
  friend bool operator==(const AbstractGraph&, const AbstractGraph&) = default;
};

AbstractGraph underlying(const RibbonGraph& g);

/// Abstract contraction in the given order: a non-loop is contracted, a
/// loop (possibly created by earlier contractions) is deleted.
/// Throws UnknownEdge, DuplicateEdge.
AbstractGraph abstract_contract(const AbstractGraph& g, std::span<const EdgeId> order);

}  // namespace surfgraph
