#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "surfgraph/error.hpp"
#include "surfgraph/operations.hpp"
#include "surfgraph/polynomial.hpp"
#include "surfgraph/ribbon_graph.hpp"

namespace surfgraph {

/// One direction per edge, relative to the reference orientation: +1 keeps
/// tail→head, -1 reverses it.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(std::vector<std::int8_t> signs);

  static Orientation reference(int edge_count);
  /// Bit e of `reversed` set ⇔ edge e is reversed. Requires edge_count ≤ 64.
  static Orientation from_mask(int edge_count, std::uint64_t reversed);
  /// '+'/'-' per edge in edge-id order (U+2212 accepted for '-').
  static Orientation parse(std::string_view text);

  int edge_count() const { return static_cast<int>(signs_.size()); }
  int sign(EdgeId e) const { return signs_[e]; }
  bool agrees(EdgeId e) const { return signs_[e] > 0; }
  const std::vector<std::int8_t>& signs() const { return signs_; }

  Orientation reversed() const;
  std::uint64_t reversed_mask() const;
  std::string to_string() const;

  friend bool operator==(const Orientation&, const Orientation&) = default;
  friend auto operator<=>(const Orientation&, const Orientation&) = default;

 private:
  std::vector<std::int8_t> signs_;
};

enum class OrientationClass { AO, TCO, BAO, TBO };

std::string_view to_string(OrientationClass c);
OrientationClass parse_orientation_class(std::string_view text);

// --- abstract digraph predicates (embedding-free) -------------------------

bool is_acyclic(const AbstractGraph& g, const Orientation& o);
/// No nonempty cut set with all edges pointing across in one direction.
bool is_totally_cyclic_by_cuts(const AbstractGraph& g, const Orientation& o);
/// Every edge has both ends in one strongly connected component.
bool is_totally_cyclic_by_components(const AbstractGraph& g, const Orientation& o);
/// Both of the above; throws Internal if they disagree.
bool is_totally_cyclic(const AbstractGraph& g, const Orientation& o);

// --- ribbon-graph predicates ----------------------------------------------

bool is_acyclic(const RibbonGraph& g, const Orientation& o);
bool is_totally_cyclic(const RibbonGraph& g, const Orientation& o);

/// Scans all face subsets F' for a coherently oriented nonempty boundary.
bool is_boundary_acyclic_by_boundaries(const RibbonGraph& g, const Orientation& o);
/// The dual orientation is totally cyclic on the dual.
bool is_boundary_acyclic_by_duality(const RibbonGraph& g, const Orientation& o);
bool is_boundary_acyclic(const RibbonGraph& g, const Orientation& o);

/// No cocycle is coherently oriented.
bool is_totally_biwalkable_by_cocycles(const RibbonGraph& g, const Orientation& o);
/// The dual orientation is acyclic on the dual.
bool is_totally_biwalkable_by_duality(const RibbonGraph& g, const Orientation& o);
bool is_totally_biwalkable(const RibbonGraph& g, const Orientation& o);

/// Orientation of dual(g) such that every dual edge crosses its primal edge
/// from the face on the right of the primal direction to the face on its
/// left. With the dart conventions of dual() this keeps every sign.
Orientation dual_orientation(const RibbonGraph& g, const Orientation& o);

/// Precomputes the dual and the cocycle list so that classifying many
/// orientations of one graph is cheap. Results are identical to the free
/// functions; every predicate runs both of its algorithms and throws
/// Error{Internal} on disagreement.
class OrientationClassifier {
 public:
  explicit OrientationClassifier(const RibbonGraph& g);

  bool is_acyclic(const Orientation& o) const;
  bool is_totally_cyclic(const Orientation& o) const;
  bool is_boundary_acyclic(const Orientation& o) const;
  bool is_totally_biwalkable(const Orientation& o) const;
  bool is_member(const Orientation& o, OrientationClass c) const;

  const RibbonGraph& graph() const { return *graph_; }
  const RibbonGraph& dual_graph() const { return dual_; }

 private:
  struct SignedCocycle {
    std::vector<EdgeId> edges;
    std::vector<std::int8_t> crossing;
  };
  const RibbonGraph* graph_;
  RibbonGraph dual_;
  AbstractGraph primal_abstract_;
  AbstractGraph dual_abstract_;
  std::vector<std::vector<std::int8_t>> face_rows_;
  std::vector<SignedCocycle> cocycles_;

  void check(const Orientation& o) const;
};

/// Brute force over all 2^|E| orientations, in increasing reversed-mask
/// order. Throws TooLarge beyond limits.max_orientation_edges.
std::vector<Orientation> enumerate_class(const RibbonGraph& g, OrientationClass c,
                                         const Limits& limits = default_limits());
std::uint64_t count_class(const RibbonGraph& g, OrientationClass c,
                          const Limits& limits = default_limits());

/// AO and TCO only depend on the abstract graph.
std::uint64_t count_class(const AbstractGraph& g, OrientationClass c,
                          const Limits& limits = default_limits());

/// Faces whose dual vertex is a sink of the dual orientation. A face with no
/// darts (around an isolated vertex) counts: an isolated sink.
FaceSet cw_faces(const RibbonGraph& g, const Orientation& o);

/// j ↦ number of totally bi-walkable orientations with exactly j cw-faces.
using CwFaceHistogram = std::map<int, std::uint64_t>;
CwFaceHistogram tbo_histogram(const RibbonGraph& g, const Limits& limits = default_limits());
IntegerPolynomial histogram_polynomial(const CwFaceHistogram& h);

/// Which vertex count enters the sign exponent of the subset-sum formula.
/// `Dual` reads |V(G*)| (= number of faces of G), `Primal` reads |V(G)|.
enum class VertexCountReading { Dual, Primal };

/// Sum over S ⊆ E of (−1)^{|S| − |V| + c(S)} · Π_{C ∈ 𝒞(S)} (1 − (1−q)^{|V(C)|}),
/// with 𝒞(S) the components of the spanning subgraph (V(G*), S) of the dual.
/// Throws TooLarge beyond limits.max_orientation_edges edges.
IntegerPolynomial tbo_generating_poly_formula(const RibbonGraph& g,
                                              VertexCountReading reading = VertexCountReading::Dual,
                                              const Limits& limits = default_limits());

}  // namespace surfgraph
