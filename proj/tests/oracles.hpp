#pragma once

// Independent reference implementations, used only by the tests. Each one
// follows a textbook definition rather than the characterization the
// library relies on.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "surfgraph/cycles.hpp"
#include "surfgraph/operations.hpp"
#include "surfgraph/orientation.hpp"

namespace surfgraph::testing {

// Proper k-colorings of the underlying graph by brute force.
inline std::uint64_t proper_colorings(const AbstractGraph& g, int k) {
  std::vector<int> color(g.vertex_count, 0);
  std::uint64_t count = 0;
  while (true) {
    bool proper = true;
    for (const auto& [t, h] : g.edges) proper = proper && color[t] != color[h];
    count += proper;
    int i = 0;
    while (i < g.vertex_count && ++color[i] == k) color[i++] = 0;
    if (i == g.vertex_count) break;
  }
  return count;
}

inline std::pair<VertexId, VertexId> arc(const AbstractGraph& g, const Orientation& o, EdgeId e) {
  const auto [t, h] = g.edges[e];
  return o.agrees(e) ? std::make_pair(t, h) : std::make_pair(h, t);
}

// Acyclic iff some vertex order puts every arc forward.
inline bool acyclic_by_vertex_orders(const AbstractGraph& g, const Orientation& o) {
  std::vector<int> order(g.vertex_count);
  std::iota(order.begin(), order.end(), 0);
  do {
    std::vector<int> pos(g.vertex_count);
    for (int i = 0; i < g.vertex_count; ++i) pos[order[i]] = i;
    bool forward = true;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const auto [a, b] = arc(g, o, e);
      forward = forward && pos[a] < pos[b];
    }
    if (forward) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return g.vertex_count == 0;
}

// Directed reachability restricted to the edges in `allowed`.
inline bool reaches(const AbstractGraph& g, const Orientation& o, VertexId from, VertexId to,
                    std::uint64_t allowed = ~std::uint64_t{0}) {
  std::vector<bool> seen(g.vertex_count, false);
  std::vector<VertexId> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (!(allowed >> e & 1)) continue;
      const auto [a, b] = arc(g, o, e);
      if (a == v && !seen[b]) {
        seen[b] = true;
        stack.push_back(b);
      }
    }
  }
  return false;
}

// Every edge lies on a directed cycle.
inline bool every_edge_on_directed_cycle(const AbstractGraph& g, const Orientation& o) {
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = arc(g, o, e);
    if (!reaches(g, o, b, a)) return false;
  }
  return true;
}

// The walk definition of total bi-walkability: every edge lies in the edge
// set S of a directed closed walk (S strongly connected on its vertices)
// that meets every cocycle it touches in two edges crossing in opposite
// directions. Subsets of E stand in for walks, so this is exact.
inline bool totally_biwalkable_by_walks(const RibbonGraph& g, const Orientation& o) {
  const AbstractGraph a = underlying(g);
  const auto cocs = cocycles(g);
  const int m = g.edge_count();
  std::vector<bool> covered(m, false);
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << m); ++s) {
    bool closed_walk = true;
    VertexId any = -1;
    for (EdgeId e = 0; e < m && closed_walk; ++e) {
      if (!(s >> e & 1)) continue;
      const auto [x, y] = arc(a, o, e);
      if (any < 0) any = x;
      closed_walk = reaches(a, o, y, x, s) && reaches(a, o, any, x, s) && reaches(a, o, x, any, s);
    }
    if (!closed_walk) continue;
    bool bidirectional = true;
    for (const auto& c : cocs) {
      bool plus = false, minus = false, meets = false;
      for (std::size_t i = 0; i < c.steps.size(); ++i) {
        const EdgeId e = c.steps[i].edge;
        if (!(s >> e & 1)) continue;
        meets = true;
        (o.sign(e) * c.crossing(i) > 0 ? plus : minus) = true;
      }
      if (meets && !(plus && minus)) bidirectional = false;
    }
    if (!bidirectional) continue;
    for (EdgeId e = 0; e < m; ++e) covered[e] = covered[e] || (s >> e & 1);
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

// x is a Z_k-tension iff it is the coboundary of some vertex potential.
inline bool tension_by_potential_search(const AbstractGraph& g, const std::vector<std::int64_t>& x, int k) {
  std::vector<int> p(g.vertex_count, 0);
  while (true) {
    bool ok = true;
    for (EdgeId e = 0; e < g.edge_count() && ok; ++e) {
      const auto [t, h] = g.edges[e];
      ok = (((p[h] - p[t] - x[e]) % k) + k) % k == 0;
    }
    if (ok) return true;
    int i = 0;
    while (i < g.vertex_count && ++p[i] == k) p[i++] = 0;
    if (i == g.vertex_count) return false;
  }
}

}  // namespace surfgraph::testing
