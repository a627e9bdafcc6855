#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "surfgraph/orientation.hpp"
#include "surfgraph/polynomial.hpp"
#include "surfgraph/ribbon_graph.hpp"

namespace surfgraph {

/// Map documents: {"sigma": [[dart, …], …], "edges": [[tail, head], …],
/// "labels": {"vertices": […], "edges": […], "faces": […]}} with labels
/// optional. An empty sigma cycle is an isolated vertex.
/// Malformed JSON or wrong shapes throw Parse; structural violations throw
/// the validation errors of RibbonGraph::build.
RibbonGraph parse_map(std::string_view text);
RibbonGraph read_map_file(const std::string& path);

/// One-line JSON document.
std::string map_to_json(const RibbonGraph& g);
void write_map_file(const RibbonGraph& g, const std::string& path);

/// Newline-delimited map documents; blank lines are skipped on input.
void write_corpus(std::ostream& out, const std::vector<RibbonGraph>& corpus);
std::vector<RibbonGraph> read_corpus(std::istream& in);

/// [c0, c1, …] as decimal strings when they do not fit in 53 bits, numbers otherwise.
std::string polynomial_to_json(const IntegerPolynomial& p);
/// {"period": p, "constituents": [["p/q", …], …]}
std::string quasipolynomial_to_json(const QuasiPolynomial& q);
/// {"j": count, …}
std::string histogram_to_json(const CwFaceHistogram& h);
/// ["p/q", …]
std::string rational_vector_to_json(const std::vector<Rational>& v);

}  // namespace surfgraph
