#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "surfgraph/error.hpp"
#include "surfgraph/ribbon_graph.hpp"

namespace surfgraph {

struct CorpusSpec {
  int edges = 0;
  std::optional<int> genus;
  bool planar_only = false;
  bool connected = true;
  bool dedupe = true;
};

/// Every rotation sigma of 2m darts with the fixed pairing (2i, 2i+1),
/// filtered and optionally deduplicated by canonical code. Deduplicated
/// output is sorted by code; otherwise it follows the sigma scan order.
/// m = 0 yields the single isolated vertex. `jobs` splits the scan by
/// sigma(0); the output does not depend on it.
/// Throws TooLarge beyond limits.max_generator_edges.
std::vector<RibbonGraph> generate(const CorpusSpec& spec, int jobs = 1,
                                  const Limits& limits = default_limits());

/// (V, E, F, c, g) → number of maps.
using CorpusStats = std::map<std::tuple<int, int, int, int, int>, std::uint64_t>;
CorpusStats corpus_stats(const std::vector<RibbonGraph>& corpus);

}  // namespace surfgraph
