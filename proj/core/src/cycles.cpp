#include "surfgraph/cycles.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "surfgraph/operations.hpp"

namespace surfgraph {

std::vector<EdgeId> Cycle::edges() const {
  std::vector<EdgeId> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(s.edge);
  return out;
}

std::vector<EdgeId> Cocycle::edges() const {
  std::vector<EdgeId> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(s.edge);
  return out;
}

std::vector<VertexId> validate_closed_trail(const RibbonGraph& g, const Cycle& c) {
  if (c.steps.empty()) throw Error(ErrorKind::InvalidCycle, "empty cycle");
  if (c.start < 0 || c.start >= g.vertex_count()) {
    throw Error(ErrorKind::InvalidCycle, "start vertex out of range");
  }
  std::vector<bool> used(g.edge_count(), false);
  std::vector<VertexId> visited{c.start};
  VertexId at = c.start;
  for (const auto& s : c.steps) {
    if (s.edge < 0 || s.edge >= g.edge_count()) {
      throw Error(ErrorKind::InvalidCycle, "unknown edge " + std::to_string(s.edge));
    }
    if (used[s.edge]) throw Error(ErrorKind::InvalidCycle, "edge " + std::to_string(s.edge) + " repeated");
    used[s.edge] = true;
    const VertexId from = s.forward ? g.tail_vertex(s.edge) : g.head_vertex(s.edge);
    const VertexId to = s.forward ? g.head_vertex(s.edge) : g.tail_vertex(s.edge);
    if (from != at) {
      throw Error(ErrorKind::InvalidCycle, "edge " + std::to_string(s.edge) + " does not leave vertex " +
                                               std::to_string(at));
    }
    at = to;
    visited.push_back(at);
  }
  if (at != c.start) throw Error(ErrorKind::InvalidCycle, "walk is not closed");
  visited.pop_back();
  return visited;
}

namespace {

struct Incidence {
  EdgeId edge;
  VertexId other;
  bool forward;
};

std::vector<std::vector<Incidence>> incidence_lists(const RibbonGraph& g) {
  std::vector<std::vector<Incidence>> adj(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const VertexId t = g.tail_vertex(e), h = g.head_vertex(e);
    if (t == h) continue;
    adj[t].push_back({e, h, true});
    adj[h].push_back({e, t, false});
  }
  return adj;
}

void extend(const std::vector<std::vector<Incidence>>& adj, VertexId start, VertexId at,
            std::vector<bool>& on_path, std::vector<CycleStep>& path, std::vector<Cycle>& out) {
  for (const auto& inc : adj[at]) {
    if (!path.empty() && inc.edge == path.back().edge) continue;
    if (inc.other == start) {
      if (path.empty() || path.front().edge >= inc.edge) continue;
      auto steps = path;
      steps.push_back({inc.edge, inc.forward});
      out.push_back({start, std::move(steps)});
      continue;
    }
    if (inc.other < start || on_path[inc.other]) continue;
    on_path[inc.other] = true;
    path.push_back({inc.edge, inc.forward});
    extend(adj, start, inc.other, on_path, path, out);
    path.pop_back();
    on_path[inc.other] = false;
  }
}

}  // namespace

std::vector<Cycle> cycles(const RibbonGraph& g, const Limits& limits) {
  if (g.edge_count() > limits.max_orientation_edges) {
    throw Error(ErrorKind::TooLarge, "cycle enumeration on " + std::to_string(g.edge_count()) + " edges");
  }
  std::vector<Cycle> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (g.is_loop(e)) out.push_back({g.tail_vertex(e), {{e, true}}});
  }
  const auto adj = incidence_lists(g);
  std::vector<bool> on_path(g.vertex_count(), false);
  std::vector<CycleStep> path;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    on_path[s] = true;
    extend(adj, s, s, on_path, path, out);
    on_path[s] = false;
  }
  return out;
}

std::vector<Cocycle> cocycles(const RibbonGraph& g, const Limits& limits) {
  const RibbonGraph d = dual(g);
  std::vector<Cocycle> out;
  for (const auto& c : cycles(d, limits)) {
    Cocycle cc;
    cc.faces.push_back(c.start);
    FaceId at = c.start;
    for (const auto& s : c.steps) {
      at = s.forward ? d.head_vertex(s.edge) : d.tail_vertex(s.edge);
      cc.faces.push_back(at);
    }
    cc.steps = c.steps;
    out.push_back(std::move(cc));
  }
  return out;
}

std::vector<Cycle> fundamental_cycles(const RibbonGraph& g) {
  const int n = g.vertex_count();
  std::vector<EdgeId> parent_edge(n, -1);
  std::vector<VertexId> parent(n, -1);
  std::vector<int> depth(n, -1);
  std::vector<bool> tree(g.edge_count(), false);

  std::vector<std::vector<std::pair<EdgeId, VertexId>>> adj(n);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    adj[g.tail_vertex(e)].emplace_back(e, g.head_vertex(e));
    adj[g.head_vertex(e)].emplace_back(e, g.tail_vertex(e));
  }
  for (VertexId root = 0; root < n; ++root) {
    if (depth[root] != -1) continue;
    depth[root] = 0;
    std::queue<VertexId> q;
    q.push(root);
    while (!q.empty()) {
      const VertexId v = q.front();
      q.pop();
      for (const auto& [e, w] : adj[v]) {
        if (depth[w] != -1) continue;
        depth[w] = depth[v] + 1;
        parent[w] = v;
        parent_edge[w] = e;
        tree[e] = true;
        q.push(w);
      }
    }
  }

  // Step from child up to its parent along the tree edge.
  auto up_step = [&](VertexId child) {
    const EdgeId e = parent_edge[child];
    return CycleStep{e, g.tail_vertex(e) == child};
  };

  std::vector<Cycle> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (tree[e]) continue;
    const VertexId u = g.tail_vertex(e), v = g.head_vertex(e);
    Cycle c{u, {{e, true}}};
    // v up to the common ancestor, then down to u.
    std::vector<CycleStep> from_v, from_u;
    VertexId a = v, b = u;
    while (a != b) {
      if (depth[a] >= depth[b]) {
        from_v.push_back(up_step(a));
        a = parent[a];
      } else {
        from_u.push_back(up_step(b));
        b = parent[b];
      }
    }
    c.steps.insert(c.steps.end(), from_v.begin(), from_v.end());
    for (auto it = from_u.rbegin(); it != from_u.rend(); ++it) c.steps.push_back({it->edge, !it->forward});
    out.push_back(std::move(c));
  }
  return out;
}

bool is_separating(const RibbonGraph& g, const Cycle& c) {
  validate_closed_trail(g, c);
  const auto e = c.edges();
  return contract_edges(g, e).component_count() == g.component_count() + 1;
}

}  // namespace surfgraph
