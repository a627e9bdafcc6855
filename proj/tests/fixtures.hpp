#pragma once

#include <string>
#include <vector>

#include "surfgraph/generator.hpp"
#include "surfgraph/ribbon_graph.hpp"

namespace surfgraph::testing {

// One vertex, two loops, one face: the standard torus map.
inline RibbonGraph torus() { return RibbonGraph::build({{0, 2, 1, 3}}, {{0, 1}, {2, 3}}); }

inline RibbonGraph bridge() { return RibbonGraph::build({{0}, {1}}, {{0, 1}}); }

inline RibbonGraph contractible_loop() { return RibbonGraph::build({{0, 1}}, {{0, 1}}); }

inline RibbonGraph edgeless(int vertices = 1) {
  return RibbonGraph::build(std::vector<std::vector<Dart>>(vertices), {});
}

// Edge i runs v_i → v_{i+1 mod 3}.
inline RibbonGraph triangle() { return RibbonGraph::build({{0, 5}, {1, 2}, {3, 4}}, {{0, 1}, {2, 3}, {4, 5}}); }

// Kite on the torus: corner vertex u, center vertex c, edges e1…e6 with
// e_i = [2(i−1), 2i−1]. Faces come out ordered as f1, f3, f2, f4.
inline RibbonGraph kite() {
  return RibbonGraph::build({{0, 6, 2, 8, 1, 10, 3, 4}, {11, 5, 7, 9}},
                            {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}, {10, 11}},
                            {{"u", "c"}, {"e1", "e2", "e3", "e4", "e5", "e6"}, {"f1", "f3", "f2", "f4"}});
}
constexpr FaceId kKiteF1 = 0, kKiteF3 = 1, kKiteF2 = 2, kKiteF4 = 3;

// Two vertices on the torus: two meridian loops, the longitude split in two.
inline RibbonGraph two_meridian_torus() {
  return RibbonGraph::build({{2, 5, 7, 4}, {6, 0, 3, 1}}, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
}

// Every connected map with at most `max_edges` edges, deduplicated.
inline const std::vector<RibbonGraph>& corpus(int max_edges = 4) {
  static const std::vector<std::vector<RibbonGraph>> by_size = [] {
    std::vector<std::vector<RibbonGraph>> out;
    for (int m = 0; m <= 4; ++m) out.push_back(generate({.edges = m}));
    return out;
  }();
  static std::vector<std::vector<RibbonGraph>> cumulative(5);
  if (cumulative[max_edges].empty()) {
    for (int m = 0; m <= max_edges; ++m) {
      cumulative[max_edges].insert(cumulative[max_edges].end(), by_size[m].begin(), by_size[m].end());
    }
  }
  return cumulative[max_edges];
}

}  // namespace surfgraph::testing
