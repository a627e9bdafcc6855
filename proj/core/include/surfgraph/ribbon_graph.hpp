#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace surfgraph {

using Dart = std::int32_t;
using EdgeId = std::int32_t;
using VertexId = std::int32_t;
using FaceId = std::int32_t;

/// The two darts of an edge. The listed order is the reference orientation:
/// the edge runs from the vertex of `tail` to the vertex of `head`.
struct EdgeEnds {
  Dart tail = 0;
  Dart head = 0;
  friend bool operator==(const EdgeEnds&, const EdgeEnds&) = default;
};

struct Labels {
  std::vector<std::string> vertices;
  std::vector<std::string> edges;
  std::vector<std::string> faces;
  bool empty() const { return vertices.empty() && edges.empty() && faces.empty(); }
  friend bool operator==(const Labels&, const Labels&) = default;
};

struct EulerData {
  int v_count = 0;
  int e_count = 0;
  int f_count = 0;
  int components = 0;
  int genus = 0;
  int euler_characteristic() const { return v_count - e_count + f_count; }
  friend bool operator==(const EulerData&, const EulerData&) = default;
};

/// A cellularly embedded graph on a closed orientable surface, stored as a
/// rotation system on darts.
///
/// sigma lists, for every vertex, its darts in counterclockwise order; alpha
/// swaps the two darts of an edge; faces are the orbits of
/// phi = sigma∘alpha (d ↦ sigma(alpha(d))). The face of dart d lies to the
/// right of the edge traversed from d's vertex towards alpha(d)'s vertex.
///
/// A vertex may have an empty rotation (an isolated vertex). It carries one
/// face of its own, so a lone vertex is a sphere.
///
/// Immutable once built; all accessors are const.
class RibbonGraph {
 public:
  RibbonGraph() = default;

  /// Validates and builds. `vertex_cycles[v]` is the counterclockwise rotation
  /// at vertex v. Throws Error{NonPermutation, BadPairing, OddDartCount}.
  static RibbonGraph build(std::vector<std::vector<Dart>> vertex_cycles,
                           std::vector<EdgeEnds> edges, Labels labels = {});

  int dart_count() const { return static_cast<int>(sigma_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int vertex_count() const { return static_cast<int>(vertex_cycles_.size()); }
  int face_count() const { return static_cast<int>(face_cycles_.size()); }
  int component_count() const { return components_; }
  int genus() const { return genus_; }
  EulerData euler_data() const;

  Dart sigma(Dart d) const { return sigma_[d]; }
  Dart alpha(Dart d) const { return alpha_[d]; }
  Dart phi(Dart d) const { return sigma_[alpha_[d]]; }

  EdgeId edge_of(Dart d) const { return edge_of_[d]; }
  bool is_tail_dart(Dart d) const { return edges_[edge_of_[d]].tail == d; }
  const EdgeEnds& ends(EdgeId e) const { return edges_[e]; }
  const std::vector<EdgeEnds>& edges() const { return edges_; }

  VertexId vertex_of(Dart d) const { return vertex_of_[d]; }
  FaceId face_of(Dart d) const { return face_of_[d]; }
  VertexId tail_vertex(EdgeId e) const { return vertex_of_[edges_[e].tail]; }
  VertexId head_vertex(EdgeId e) const { return vertex_of_[edges_[e].head]; }
  /// Face on the right of the reference direction of e.
  FaceId tail_face(EdgeId e) const { return face_of_[edges_[e].tail]; }
  /// Face on the left of the reference direction of e.
  FaceId head_face(EdgeId e) const { return face_of_[edges_[e].head]; }

  bool is_loop(EdgeId e) const { return tail_vertex(e) == head_vertex(e); }
  /// Both sides of e lie in the same face (the dual edge is a loop).
  bool is_single_face_edge(EdgeId e) const { return tail_face(e) == head_face(e); }

  std::span<const Dart> vertex_darts(VertexId v) const { return vertex_cycles_[v]; }
  /// Darts of face f in phi order, starting at the smallest dart.
  std::span<const Dart> face_darts(FaceId f) const { return face_cycles_[f]; }
  const std::vector<std::vector<Dart>>& vertex_cycles() const { return vertex_cycles_; }
  const std::vector<std::vector<Dart>>& face_cycles() const { return face_cycles_; }

  int component_of_vertex(VertexId v) const { return vertex_component_[v]; }
  int component_of_face(FaceId f) const { return face_component_[f]; }
  bool is_planar() const { return genus_ == 0; }

  const Labels& labels() const { return labels_; }

  /// Same darts, same sigma, same edge pairs (with reference orientation)
  /// and the same number of isolated vertices. Labels and the order in which
  /// vertex cycles were listed are ignored.
  bool same_darts(const RibbonGraph& other) const;

 private:
  std::vector<Dart> sigma_;
  std::vector<Dart> alpha_;
  std::vector<EdgeId> edge_of_;
  std::vector<VertexId> vertex_of_;
  std::vector<FaceId> face_of_;
  std::vector<EdgeEnds> edges_;
  std::vector<std::vector<Dart>> vertex_cycles_;
  std::vector<std::vector<Dart>> face_cycles_;
  std::vector<int> vertex_component_;
  std::vector<int> face_component_;
  int components_ = 0;
  int genus_ = 0;
  Labels labels_;
};

}  // namespace surfgraph
