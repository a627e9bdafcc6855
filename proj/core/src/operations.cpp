#include "surfgraph/operations.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "surfgraph/error.hpp"

namespace surfgraph {

namespace {

void check_edges(const RibbonGraph& g, std::span<const EdgeId> ids) {
  for (const EdgeId e : ids) {
    if (e < 0 || e >= g.edge_count()) {
      throw Error(ErrorKind::UnknownEdge, "edge " + std::to_string(e) + " not in graph with " +
                                              std::to_string(g.edge_count()) + " edges");
    }
  }
}

void check_distinct(std::span<const EdgeId> ids, int edge_count) {
  std::vector<bool> seen(edge_count, false);
  for (const EdgeId e : ids) {
    if (seen[e]) throw Error(ErrorKind::DuplicateEdge, "edge " + std::to_string(e) + " repeated");
    seen[e] = true;
  }
}

}  // namespace

RibbonGraph dual(const RibbonGraph& g) {
  std::vector<std::vector<Dart>> rotations(g.face_cycles().begin(), g.face_cycles().end());
  Labels labels;
  labels.edges = g.labels().edges;
  labels.vertices = g.labels().faces;
  auto result = RibbonGraph::build(std::move(rotations), g.edges(), {});
  if (!g.labels().vertices.empty()) {
    // Face f of the dual is the sigma-orbit of some vertex of g; isolated
    // vertices of g become the trailing faces, in vertex order.
    labels.faces.resize(result.face_count());
    std::vector<VertexId> isolated;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (g.vertex_darts(v).empty()) isolated.push_back(v);
    }
    std::size_t next_isolated = 0;
    for (FaceId f = 0; f < result.face_count(); ++f) {
      const auto darts = result.face_darts(f);
      const VertexId v = darts.empty() ? isolated[next_isolated++] : g.vertex_of(darts.front());
      labels.faces[f] = g.labels().vertices[v];
    }
  }
  if (labels.empty()) return result;
  return RibbonGraph::build(result.vertex_cycles(), result.edges(), std::move(labels));
}

std::vector<EdgeId> surviving_edge_ids(int edge_count, std::span<const EdgeId> removed) {
  std::vector<EdgeId> map(edge_count, 0);
  for (const EdgeId e : removed) map[e] = -1;
  EdgeId next = 0;
  for (auto& m : map) m = (m == -1) ? -1 : next++;
  return map;
}

RibbonGraph delete_edges(const RibbonGraph& g, std::span<const EdgeId> removed) {
  check_edges(g, removed);
  if (removed.empty()) return g;
  const auto edge_map = surviving_edge_ids(g.edge_count(), removed);

  std::vector<Dart> dart_map(g.dart_count(), -1);
  Dart next = 0;
  for (Dart d = 0; d < g.dart_count(); ++d) {
    if (edge_map[g.edge_of(d)] != -1) dart_map[d] = next++;
  }

  std::vector<std::vector<Dart>> rotations;
  rotations.reserve(g.vertex_count());
  for (const auto& cyc : g.vertex_cycles()) {
    auto& out = rotations.emplace_back();
    for (const Dart d : cyc) {
      if (dart_map[d] != -1) out.push_back(dart_map[d]);
    }
  }
  std::vector<EdgeEnds> edges;
  Labels labels;
  labels.vertices = g.labels().vertices;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (edge_map[e] == -1) continue;
    edges.push_back({dart_map[g.ends(e).tail], dart_map[g.ends(e).head]});
    if (!g.labels().edges.empty()) labels.edges.push_back(g.labels().edges[e]);
  }
  return RibbonGraph::build(std::move(rotations), std::move(edges), std::move(labels));
}

RibbonGraph contract_edges(const RibbonGraph& g, std::span<const EdgeId> contracted) {
  check_edges(g, contracted);
  if (contracted.empty()) return g;
  auto result = dual(delete_edges(dual(g), contracted));
  Labels labels;
  labels.edges = result.labels().edges;
  return RibbonGraph::build(result.vertex_cycles(), result.edges(), std::move(labels));
}

RibbonGraph double_slash(const RibbonGraph& g, std::span<const EdgeId> order) {
  check_edges(g, order);
  check_distinct(order, g.edge_count());
  std::vector<EdgeId> current(g.edge_count());
  std::iota(current.begin(), current.end(), 0);
  RibbonGraph h = g;
  for (const EdgeId original : order) {
    const EdgeId e = current[original];
    const EdgeId one[] = {e};
    h = h.is_single_face_edge(e) ? contract_edges(h, one) : delete_edges(h, one);
    current[original] = -1;
    for (auto& c : current) {
      if (c > e) --c;
    }
  }
  return h;
}

int AbstractGraph::component_count() const {
  std::vector<int> parent(vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int count = vertex_count;
  for (const auto& [a, b] : edges) {
    const int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --count;
    }
  }
  return count;
}

AbstractGraph underlying(const RibbonGraph& g) {
  AbstractGraph a;
  a.vertex_count = g.vertex_count();
  a.edges.reserve(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) a.edges.emplace_back(g.tail_vertex(e), g.head_vertex(e));
  return a;
}

AbstractGraph abstract_contract(const AbstractGraph& g, std::span<const EdgeId> order) {
  for (const EdgeId e : order) {
    if (e < 0 || e >= g.edge_count()) {
      throw Error(ErrorKind::UnknownEdge, "edge " + std::to_string(e) + " not in abstract graph");
    }
  }
  check_distinct(order, g.edge_count());

  std::vector<int> parent(g.vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // A loop is deleted, a non-loop merges its ends; either way the edge goes.
  for (const EdgeId e : order) {
    const int a = find(g.edges[e].first), b = find(g.edges[e].second);
    if (a != b) parent[b] = a;
  }

  std::vector<int> new_id(g.vertex_count, -1);
  AbstractGraph out;
  for (int v = 0; v < g.vertex_count; ++v) {
    const int r = find(v);
    if (new_id[r] == -1) new_id[r] = out.vertex_count++;
  }
  std::vector<bool> gone(g.edge_count(), false);
  for (const EdgeId e : order) gone[e] = true;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (gone[e]) continue;
    out.edges.emplace_back(new_id[find(g.edges[e].first)], new_id[find(g.edges[e].second)]);
  }
  return out;
}

}  // namespace surfgraph
