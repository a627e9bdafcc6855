#include "surfgraph/ribbon_graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "surfgraph/error.hpp"

namespace surfgraph {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace

RibbonGraph RibbonGraph::build(std::vector<std::vector<Dart>> vertex_cycles,
                               std::vector<EdgeEnds> edges, Labels labels) {
  std::size_t listed = 0;
  for (const auto& cyc : vertex_cycles) listed += cyc.size();
  const auto n = static_cast<Dart>(listed);
  if (n % 2 != 0) {
    throw Error(ErrorKind::OddDartCount, std::to_string(n) + " darts listed in sigma");
  }

  RibbonGraph g;
  g.sigma_.assign(n, -1);
  g.vertex_of_.assign(n, -1);
  for (VertexId v = 0; v < static_cast<VertexId>(vertex_cycles.size()); ++v) {
    const auto& cyc = vertex_cycles[v];
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const Dart d = cyc[i];
      if (d < 0 || d >= n) {
        throw Error(ErrorKind::NonPermutation, "dart " + std::to_string(d) + " out of range [0," +
                                                   std::to_string(n) + ")");
      }
      if (g.vertex_of_[d] != -1) {
        throw Error(ErrorKind::NonPermutation, "dart " + std::to_string(d) + " repeated in sigma");
      }
      g.vertex_of_[d] = v;
      g.sigma_[d] = cyc[(i + 1) % cyc.size()];
    }
  }

  if (edges.size() * 2 != static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::BadPairing, std::to_string(edges.size()) + " edges for " +
                                           std::to_string(n) + " darts");
  }
  g.alpha_.assign(n, -1);
  g.edge_of_.assign(n, -1);
  for (EdgeId e = 0; e < static_cast<EdgeId>(edges.size()); ++e) {
    const auto [t, h] = edges[e];
    if (t < 0 || t >= n || h < 0 || h >= n) {
      throw Error(ErrorKind::BadPairing, "edge " + std::to_string(e) + " names an unknown dart");
    }
    if (t == h) {
      throw Error(ErrorKind::BadPairing, "dart " + std::to_string(t) + " paired with itself");
    }
    if (g.edge_of_[t] != -1 || g.edge_of_[h] != -1) {
      throw Error(ErrorKind::BadPairing, "edge " + std::to_string(e) + " reuses a dart");
    }
    g.edge_of_[t] = g.edge_of_[h] = e;
    g.alpha_[t] = h;
    g.alpha_[h] = t;
  }

  g.edges_ = std::move(edges);
  g.vertex_cycles_ = std::move(vertex_cycles);
  g.labels_ = std::move(labels);

  // Faces: phi-orbits in order of their smallest dart, then one face per
  // isolated vertex.
  g.face_of_.assign(n, -1);
  for (Dart start = 0; start < n; ++start) {
    if (g.face_of_[start] != -1) continue;
    const auto f = static_cast<FaceId>(g.face_cycles_.size());
    auto& cyc = g.face_cycles_.emplace_back();
    for (Dart d = start; g.face_of_[d] == -1; d = g.phi(d)) {
      g.face_of_[d] = f;
      cyc.push_back(d);
    }
  }
  std::vector<VertexId> isolated;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.vertex_cycles_[v].empty()) {
      isolated.push_back(v);
      g.face_cycles_.emplace_back();
    }
  }

  DisjointSets sets(g.vertex_count());
  for (const auto& [t, h] : g.edges_) sets.unite(g.vertex_of_[t], g.vertex_of_[h]);
  std::vector<int> root_index(g.vertex_count(), -1);
  g.vertex_component_.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const int r = sets.find(v);
    if (root_index[r] == -1) root_index[r] = g.components_++;
    g.vertex_component_[v] = root_index[r];
  }
  g.face_component_.resize(g.face_count());
  const int orbit_faces = g.face_count() - static_cast<int>(isolated.size());
  for (FaceId f = 0; f < orbit_faces; ++f) {
    g.face_component_[f] = g.vertex_component_[g.vertex_of_[g.face_cycles_[f].front()]];
  }
  for (std::size_t i = 0; i < isolated.size(); ++i) {
    g.face_component_[orbit_faces + static_cast<int>(i)] = g.vertex_component_[isolated[i]];
  }

  const int chi = g.vertex_count() - g.edge_count() + g.face_count();
  const int twice_genus = 2 * g.components_ - chi;
  if (twice_genus < 0 || twice_genus % 2 != 0) {
    throw Error(ErrorKind::Internal, "Euler characteristic " + std::to_string(chi) +
                                         " inconsistent with " + std::to_string(g.components_) +
                                         " components");
  }
  g.genus_ = twice_genus / 2;
  return g;
}

EulerData RibbonGraph::euler_data() const {
  return EulerData{vertex_count(), edge_count(), face_count(), components_, genus_};
}

bool RibbonGraph::same_darts(const RibbonGraph& other) const {
  auto isolated = [](const RibbonGraph& g) {
    return std::count_if(g.vertex_cycles_.begin(), g.vertex_cycles_.end(),
                         [](const auto& c) { return c.empty(); });
  };
  return sigma_ == other.sigma_ && edges_ == other.edges_ && isolated(*this) == isolated(other);
}

}  // namespace surfgraph
