#pragma once

#include <span>
#include <string>

#include "surfgraph/ribbon_graph.hpp"

namespace surfgraph {

/// Canonical form of a map up to orientation-preserving relabelling of
/// darts. Each component is relabelled breadth-first from every possible
/// root dart (visiting sigma(d) before alpha(d)) and the lexicographically
/// smallest (sigma, alpha) table is kept; component codes are sorted and
/// isolated vertices counted. The reference orientation is not part of the
/// code. Equal codes ⇔ isomorphic oriented maps.
std::string canonical_code(const RibbonGraph& g);

/// Same code, straight from permutation tables (used by the generator to
/// avoid building graphs it will discard). `isolated` counts empty rotations.
std::string canonical_code(std::span<const Dart> sigma, std::span<const Dart> alpha, int isolated = 0);

}  // namespace surfgraph
