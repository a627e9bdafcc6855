#pragma once

#include <map>
#include <string>
#include <vector>

#include "surfgraph/error.hpp"
#include "surfgraph/generator.hpp"
#include "surfgraph/ribbon_graph.hpp"

namespace surfgraph {

/// One identity on one graph. Both sides are kept as text so that a failure
/// can be diagnosed from the report alone. Informational entries record a
/// comparison without affecting the verdict.
struct IdentityCheck {
  std::string name;
  bool pass = false;
  bool informational = false;
  std::string lhs;
  std::string rhs;
  std::string note;
};

struct GraphReport {
  std::string code;
  EulerData euler;
  int kmax = 0;
  std::vector<IdentityCheck> checks;
  double seconds = 0;

  bool passed() const;
  int failures() const;
};

struct VerifyOptions {
  int kmax = 3;
  /// integral reciprocity only runs up to this many edges
  int integral_max_edges = 4;
  Limits limits = default_limits();
};

/// Runs, on one graph: the four polynomial dualities (k = 1…kmax), the
/// elementwise BAO→TCO* and AO→TBO* bijections, the four minus-one
/// identities, the four reciprocity pair counts plus the signed local form
/// (k = 1…kmax), integral reciprocity (k = 0…kmax), the planar collapse,
/// witness vectors, and three derived consequences. Library errors inside
/// a check are caught and recorded as failures of that check.
GraphReport verify_graph(const RibbonGraph& g, const VerifyOptions& options = {});

struct IdentityTally {
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
};

struct BatchReport {
  CorpusSpec spec;
  int kmax = 0;
  std::vector<GraphReport> graphs;        // corpus order
  std::map<std::string, IdentityTally> by_identity;
  double seconds = 0;

  std::uint64_t failures() const;
};

/// verify_graph over generate(spec), distributed across `jobs` workers.
/// The report is identical for every job count apart from timings.
BatchReport verify_batch(const CorpusSpec& spec, const VerifyOptions& options = {}, int jobs = 1);
BatchReport verify_corpus(const std::vector<RibbonGraph>& corpus, const VerifyOptions& options = {},
                          int jobs = 1);

/// JSON renderings (stable key order).
std::string report_to_json(const GraphReport& r);
std::string report_to_json(const BatchReport& r, bool include_graphs = false);

}  // namespace surfgraph
