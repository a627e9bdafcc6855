#include "surfgraph/orientation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "surfgraph/boundary.hpp"
#include "surfgraph/cycles.hpp"

namespace surfgraph {

// --- Orientation ----------------------------------------------------------

Orientation::Orientation(std::vector<std::int8_t> signs) : signs_(std::move(signs)) {
  for (const auto s : signs_) {
    if (s != 1 && s != -1) throw Error(ErrorKind::Parse, "orientation signs must be +1 or -1");
  }
}

Orientation Orientation::reference(int edge_count) {
  return Orientation(std::vector<std::int8_t>(edge_count, 1));
}

Orientation Orientation::from_mask(int edge_count, std::uint64_t reversed) {
  if (edge_count > 64) throw Error(ErrorKind::TooLarge, "mask orientations need at most 64 edges");
  std::vector<std::int8_t> signs(edge_count);
  for (int e = 0; e < edge_count; ++e) signs[e] = ((reversed >> e) & 1U) != 0 ? -1 : 1;
  return Orientation(std::move(signs));
}

Orientation Orientation::parse(std::string_view text) {
  static constexpr std::string_view kMinus = "\xE2\x88\x92";  // U+2212
  std::vector<std::int8_t> signs;
  for (std::size_t i = 0; i < text.size();) {
    if (text[i] == '+') {
      signs.push_back(1);
      ++i;
    } else if (text[i] == '-') {
      signs.push_back(-1);
      ++i;
    } else if (text.substr(i, kMinus.size()) == kMinus) {
      signs.push_back(-1);
      i += kMinus.size();
    } else {
      throw Error(ErrorKind::Parse, "unexpected character in orientation '" + std::string(text) + "'");
    }
  }
  return Orientation(std::move(signs));
}

Orientation Orientation::reversed() const {
  auto s = signs_;
  for (auto& x : s) x = static_cast<std::int8_t>(-x);
  return Orientation(std::move(s));
}

std::uint64_t Orientation::reversed_mask() const {
  if (edge_count() > 64) throw Error(ErrorKind::TooLarge, "mask orientations need at most 64 edges");
  std::uint64_t m = 0;
  for (int e = 0; e < edge_count(); ++e) {
    if (signs_[e] < 0) m |= std::uint64_t{1} << e;
  }
  return m;
}

std::string Orientation::to_string() const {
  std::string s;
  s.reserve(signs_.size());
  for (const auto x : signs_) s.push_back(x > 0 ? '+' : '-');
  return s;
}

std::string_view to_string(OrientationClass c) {
  switch (c) {
    case OrientationClass::AO: return "ao";
    case OrientationClass::TCO: return "tco";
    case OrientationClass::BAO: return "bao";
    case OrientationClass::TBO: return "tbo";
  }
  return "?";
}

OrientationClass parse_orientation_class(std::string_view text) {
  if (text == "ao") return OrientationClass::AO;
  if (text == "tco") return OrientationClass::TCO;
  if (text == "bao") return OrientationClass::BAO;
  if (text == "tbo") return OrientationClass::TBO;
  throw Error(ErrorKind::Parse, "unknown orientation class '" + std::string(text) + "'");
}

// --- abstract digraphs ----------------------------------------------------

namespace {

void check_size(const AbstractGraph& g, const Orientation& o) {
  if (o.edge_count() != g.edge_count()) {
    throw Error(ErrorKind::GraphMismatch, "orientation has " + std::to_string(o.edge_count()) +
                                              " edges, graph has " + std::to_string(g.edge_count()));
  }
}

std::pair<VertexId, VertexId> directed(const AbstractGraph& g, const Orientation& o, EdgeId e) {
  const auto [t, h] = g.edges[e];
  return o.agrees(e) ? std::pair{t, h} : std::pair{h, t};
}

std::vector<std::vector<VertexId>> out_lists(const AbstractGraph& g, const Orientation& o, bool reverse) {
  std::vector<std::vector<VertexId>> adj(g.vertex_count);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [from, to] = directed(g, o, e);
    if (reverse) std::swap(from, to);
    adj[from].push_back(to);
  }
  return adj;
}

}  // namespace

bool is_acyclic(const AbstractGraph& g, const Orientation& o) {
  check_size(g, o);
  std::vector<int> indegree(g.vertex_count, 0);
  const auto adj = out_lists(g, o, false);
  for (const auto& out : adj) {
    for (const VertexId w : out) ++indegree[w];
  }
  std::vector<VertexId> ready;
  for (VertexId v = 0; v < g.vertex_count; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  int removed = 0;
  while (!ready.empty()) {
    const VertexId v = ready.back();
    ready.pop_back();
    ++removed;
    for (const VertexId w : adj[v]) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  return removed == g.vertex_count;
}

bool is_totally_cyclic_by_cuts(const AbstractGraph& g, const Orientation& o) {
  check_size(g, o);
  if (g.vertex_count > 30) throw Error(ErrorKind::TooLarge, "cut scan over more than 30 vertices");
  const std::uint64_t full = (std::uint64_t{1} << g.vertex_count) - 1;
  for (std::uint64_t side = 1; side < full; ++side) {
    bool crossing = false, all_out = true;
    for (EdgeId e = 0; e < g.edge_count() && all_out; ++e) {
      const auto [from, to] = directed(g, o, e);
      const bool in_from = ((side >> from) & 1U) != 0, in_to = ((side >> to) & 1U) != 0;
      if (in_from == in_to) continue;
      crossing = true;
      all_out = in_from;
    }
    if (crossing && all_out) return false;
  }
  return true;
}

bool is_totally_cyclic_by_components(const AbstractGraph& g, const Orientation& o) {
  check_size(g, o);
  const int n = g.vertex_count;
  const auto fwd = out_lists(g, o, false);
  const auto bwd = out_lists(g, o, true);

  // Kosaraju: finishing order on the digraph, then components on its reverse.
  std::vector<bool> seen(n, false);
  std::vector<VertexId> finish;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::pair<VertexId, std::size_t>> stack{{s, 0}};
    seen[s] = true;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i < fwd[v].size()) {
        const VertexId w = fwd[v][i++];
        if (!seen[w]) {
          seen[w] = true;
          stack.emplace_back(w, 0);
        }
      } else {
        finish.push_back(v);
        stack.pop_back();
      }
    }
  }
  std::vector<int> scc(n, -1);
  int count = 0;
  for (auto it = finish.rbegin(); it != finish.rend(); ++it) {
    if (scc[*it] != -1) continue;
    std::vector<VertexId> stack{*it};
    scc[*it] = count;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (const VertexId w : bwd[v]) {
        if (scc[w] == -1) {
          scc[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  // each connected component must be a single strong component
  for (const auto& [t, h] : g.edges) {
    if (scc[t] != scc[h]) return false;
  }
  return true;
}

bool is_totally_cyclic(const AbstractGraph& g, const Orientation& o) {
  const bool by_cuts = is_totally_cyclic_by_cuts(g, o);
  if (by_cuts != is_totally_cyclic_by_components(g, o)) {
    throw Error(ErrorKind::Internal, "cut and strong-connectivity tests disagree on " + o.to_string());
  }
  return by_cuts;
}

// --- ribbon graphs --------------------------------------------------------

namespace {

std::vector<std::vector<std::int8_t>> face_rows(const RibbonGraph& g) {
  const FaceMatrix d(g);
  std::vector<std::vector<std::int8_t>> rows;
  for (FaceId f = 0; f < d.rows(); ++f) rows.emplace_back(d.row(f).begin(), d.row(f).end());
  return rows;
}

}  // namespace

Orientation dual_orientation(const RibbonGraph& g, const Orientation& o) {
  if (o.edge_count() != g.edge_count()) {
    throw Error(ErrorKind::GraphMismatch, "orientation has " + std::to_string(o.edge_count()) +
                                              " edges, graph has " + std::to_string(g.edge_count()));
  }
  // The dual reference edge already runs from the right face (tail dart) to
  // the left face (head dart), so signs carry over unchanged.
  return o;
}

OrientationClassifier::OrientationClassifier(const RibbonGraph& g)
    : graph_(&g), dual_(dual(g)), primal_abstract_(underlying(g)), dual_abstract_(underlying(dual_)) {
  face_rows_ = face_rows(g);
  for (const auto& c : cocycles(g)) {
    SignedCocycle sc;
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
      sc.edges.push_back(c.steps[i].edge);
      sc.crossing.push_back(static_cast<std::int8_t>(c.crossing(i)));
    }
    cocycles_.push_back(std::move(sc));
  }
}

void OrientationClassifier::check(const Orientation& o) const {
  if (o.edge_count() != graph_->edge_count()) {
    throw Error(ErrorKind::GraphMismatch, "orientation has " + std::to_string(o.edge_count()) +
                                              " edges, graph has " + std::to_string(graph_->edge_count()));
  }
}

bool OrientationClassifier::is_acyclic(const Orientation& o) const {
  check(o);
  return surfgraph::is_acyclic(primal_abstract_, o);
}

bool OrientationClassifier::is_totally_cyclic(const Orientation& o) const {
  check(o);
  return surfgraph::is_totally_cyclic(primal_abstract_, o);
}

bool OrientationClassifier::is_boundary_acyclic(const Orientation& o) const {
  check(o);
  const int faces = graph_->face_count();
  if (faces > 30) throw Error(ErrorKind::TooLarge, "boundary scan over more than 30 faces");
  bool by_boundaries = true;
  std::vector<int> sum(graph_->edge_count());
  const std::uint64_t subsets = std::uint64_t{1} << faces;
  for (std::uint64_t mask = 1; mask < subsets && by_boundaries; ++mask) {
    std::fill(sum.begin(), sum.end(), 0);
    for (int f = 0; f < faces; ++f) {
      if (((mask >> f) & 1U) == 0) continue;
      for (std::size_t e = 0; e < sum.size(); ++e) sum[e] += face_rows_[f][e];
    }
    int positive = 0, negative = 0;
    for (std::size_t e = 0; e < sum.size(); ++e) {
      const int v = sum[e] * o.sign(static_cast<EdgeId>(e));
      positive += v > 0;
      negative += v < 0;
    }
    if ((positive > 0) != (negative > 0)) by_boundaries = false;
  }
  const bool by_duality = surfgraph::is_totally_cyclic(dual_abstract_, dual_orientation(*graph_, o));
  if (by_boundaries != by_duality) {
    throw Error(ErrorKind::Internal, "boundary scan and dual total cyclicity disagree on " + o.to_string());
  }
  return by_boundaries;
}

bool OrientationClassifier::is_totally_biwalkable(const Orientation& o) const {
  check(o);
  bool by_cocycles = true;
  for (const auto& c : cocycles_) {
    const int first = o.sign(c.edges[0]) * c.crossing[0];
    bool coherent = true;
    for (std::size_t i = 1; i < c.edges.size() && coherent; ++i) {
      coherent = o.sign(c.edges[i]) * c.crossing[i] == first;
    }
    if (coherent) {
      by_cocycles = false;
      break;
    }
  }
  const bool by_duality = surfgraph::is_acyclic(dual_abstract_, dual_orientation(*graph_, o));
  if (by_cocycles != by_duality) {
    throw Error(ErrorKind::Internal, "cocycle scan and dual acyclicity disagree on " + o.to_string());
  }
  return by_cocycles;
}

bool OrientationClassifier::is_member(const Orientation& o, OrientationClass c) const {
  switch (c) {
    case OrientationClass::AO: return is_acyclic(o);
    case OrientationClass::TCO: return is_totally_cyclic(o);
    case OrientationClass::BAO: return is_boundary_acyclic(o);
    case OrientationClass::TBO: return is_totally_biwalkable(o);
  }
  return false;
}

bool is_acyclic(const RibbonGraph& g, const Orientation& o) { return is_acyclic(underlying(g), o); }

bool is_totally_cyclic(const RibbonGraph& g, const Orientation& o) {
  return is_totally_cyclic(underlying(g), o);
}

bool is_boundary_acyclic_by_boundaries(const RibbonGraph& g, const Orientation& o) {
  if (o.edge_count() != g.edge_count()) {
    throw Error(ErrorKind::GraphMismatch, "orientation does not match graph");
  }
  if (g.face_count() > 30) throw Error(ErrorKind::TooLarge, "boundary scan over more than 30 faces");
  const auto rows = face_rows(g);
  const std::uint64_t subsets = std::uint64_t{1} << g.face_count();
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    int positive = 0, negative = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      int s = 0;
      for (FaceId f = 0; f < g.face_count(); ++f) {
        if (((mask >> f) & 1U) != 0) s += rows[f][e];
      }
      s *= o.sign(e);
      positive += s > 0;
      negative += s < 0;
    }
    if ((positive > 0) != (negative > 0)) return false;
  }
  return true;
}

bool is_boundary_acyclic_by_duality(const RibbonGraph& g, const Orientation& o) {
  return is_totally_cyclic(underlying(dual(g)), dual_orientation(g, o));
}

bool is_boundary_acyclic(const RibbonGraph& g, const Orientation& o) {
  return OrientationClassifier(g).is_boundary_acyclic(o);
}

bool is_totally_biwalkable_by_cocycles(const RibbonGraph& g, const Orientation& o) {
  if (o.edge_count() != g.edge_count()) {
    throw Error(ErrorKind::GraphMismatch, "orientation does not match graph");
  }
  for (const auto& c : cocycles(g)) {
    std::vector<int> dir;
    for (std::size_t i = 0; i < c.steps.size(); ++i) dir.push_back(o.sign(c.steps[i].edge) * c.crossing(i));
    if (std::all_of(dir.begin(), dir.end(), [&](int x) { return x == dir.front(); })) return false;
  }
  return true;
}

bool is_totally_biwalkable_by_duality(const RibbonGraph& g, const Orientation& o) {
  return is_acyclic(underlying(dual(g)), dual_orientation(g, o));
}

bool is_totally_biwalkable(const RibbonGraph& g, const Orientation& o) {
  return OrientationClassifier(g).is_totally_biwalkable(o);
}

// --- enumeration ----------------------------------------------------------

namespace {

void guard_orientations(int edges, const Limits& limits) {
  if (edges > limits.max_orientation_edges || edges > 63) {
    throw Error(ErrorKind::TooLarge, "2^" + std::to_string(edges) + " orientations exceed the guard of 2^" +
                                         std::to_string(limits.max_orientation_edges));
  }
}

}  // namespace

std::vector<Orientation> enumerate_class(const RibbonGraph& g, OrientationClass c, const Limits& limits) {
  guard_orientations(g.edge_count(), limits);
  const OrientationClassifier classifier(g);
  std::vector<Orientation> out;
  const std::uint64_t total = std::uint64_t{1} << g.edge_count();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    auto o = Orientation::from_mask(g.edge_count(), mask);
    if (classifier.is_member(o, c)) out.push_back(std::move(o));
  }
  return out;
}

std::uint64_t count_class(const RibbonGraph& g, OrientationClass c, const Limits& limits) {
  guard_orientations(g.edge_count(), limits);
  const OrientationClassifier classifier(g);
  std::uint64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << g.edge_count();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    count += classifier.is_member(Orientation::from_mask(g.edge_count(), mask), c) ? 1 : 0;
  }
  return count;
}

std::uint64_t count_class(const AbstractGraph& g, OrientationClass c, const Limits& limits) {
  if (c != OrientationClass::AO && c != OrientationClass::TCO) {
    throw Error(ErrorKind::GraphMismatch, "boundary acyclic and bi-walkable classes need an embedding");
  }
  guard_orientations(g.edge_count(), limits);
  std::uint64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << g.edge_count();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const auto o = Orientation::from_mask(g.edge_count(), mask);
    count += (c == OrientationClass::AO ? is_acyclic(g, o) : is_totally_cyclic(g, o)) ? 1 : 0;
  }
  return count;
}

// --- cw-faces -------------------------------------------------------------

FaceSet cw_faces(const RibbonGraph& g, const Orientation& o) {
  if (o.edge_count() != g.edge_count()) {
    throw Error(ErrorKind::GraphMismatch, "orientation does not match graph");
  }
  FaceSet out;
  for (FaceId f = 0; f < g.face_count(); ++f) {
    // every dart of f must be the head end of its edge under o
    const auto darts = g.face_darts(f);
    const bool sink = std::all_of(darts.begin(), darts.end(), [&](Dart d) {
      return g.is_tail_dart(d) != o.agrees(g.edge_of(d));
    });
    if (sink) out.push_back(f);
  }
  return out;
}

CwFaceHistogram tbo_histogram(const RibbonGraph& g, const Limits& limits) {
  CwFaceHistogram h;
  for (const auto& o : enumerate_class(g, OrientationClass::TBO, limits)) {
    ++h[static_cast<int>(cw_faces(g, o).size())];
  }
  return h;
}

IntegerPolynomial histogram_polynomial(const CwFaceHistogram& h) {
  IntegerPolynomial p;
  for (const auto& [j, count] : h) p += IntegerPolynomial::monomial(BigInt(count), j);
  return p;
}

IntegerPolynomial tbo_generating_poly_formula(const RibbonGraph& g, VertexCountReading reading,
                                              const Limits& limits) {
  guard_orientations(g.edge_count(), limits);
  const int n = g.face_count();  // vertices of the dual
  const int sign_vertices = reading == VertexCountReading::Dual ? n : g.vertex_count();
  const IntegerPolynomial one_minus_q({BigInt(1), BigInt(-1)});
  std::vector<IntegerPolynomial> block(n + 1);  // 1 − (1−q)^s
  for (int s = 0; s <= n; ++s) block[s] = IntegerPolynomial::constant(1) - one_minus_q.pow(s);

  IntegerPolynomial total;
  const std::uint64_t subsets = std::uint64_t{1} << g.edge_count();
  std::vector<int> parent(n), size(n);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int chosen = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (((mask >> e) & 1U) == 0) continue;
      ++chosen;
      const int a = find(g.tail_face(e)), b = find(g.head_face(e));
      if (a != b) parent[a] = b;
    }
    std::fill(size.begin(), size.end(), 0);
    int components = 0;
    for (int v = 0; v < n; ++v) {
      if (size[find(v)]++ == 0) ++components;
    }
    IntegerPolynomial term = IntegerPolynomial::constant(1);
    for (int v = 0; v < n; ++v) {
      if (size[v] > 0) term = term * block[size[v]];
    }
    const int exponent = chosen - sign_vertices + components;
    if (exponent % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

}  // namespace surfgraph
