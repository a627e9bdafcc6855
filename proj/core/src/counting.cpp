#include "surfgraph/counting.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <thread>

#include "surfgraph/boundary.hpp"
#include "surfgraph/cycles.hpp"
#include "surfgraph/operations.hpp"

namespace surfgraph {

std::uint64_t EdgeAssignment::support_mask() const {
  std::uint64_t m = 0;
  for (std::size_t e = 0; e < values.size(); ++e) {
    if (values[e] != 0) m |= std::uint64_t{1} << e;
  }
  return m;
}

std::vector<EdgeId> EdgeAssignment::support() const {
  std::vector<EdgeId> s;
  for (std::size_t e = 0; e < values.size(); ++e) {
    if (values[e] != 0) s.push_back(static_cast<EdgeId>(e));
  }
  return s;
}

namespace {

std::int64_t row_value(const std::vector<std::pair<EdgeId, int>>& row, std::span<const std::int64_t> x) {
  std::int64_t s = 0;
  for (const auto& [e, c] : row) s += c * x[e];
  return s;
}

std::int64_t mod(std::int64_t a, std::int64_t k) { return ((a % k) + k) % k; }

}  // namespace

bool LinearSystem::holds_mod(std::span<const std::int64_t> x, std::int64_t k) const {
  return std::all_of(rows.begin(), rows.end(), [&](const auto& r) { return mod(row_value(r, x), k) == 0; });
}

bool LinearSystem::holds_exactly(std::span<const std::int64_t> x) const {
  return std::all_of(rows.begin(), rows.end(), [&](const auto& r) { return row_value(r, x) == 0; });
}

namespace {

void add_cycle_row(LinearSystem& sys, const Cycle& c) {
  std::vector<std::pair<EdgeId, int>> row;
  for (std::size_t i = 0; i < c.steps.size(); ++i) row.emplace_back(c.steps[i].edge, c.sign(i));
  sys.rows.push_back(std::move(row));
}

}  // namespace

LinearSystem tension_system(const RibbonGraph& g) {
  LinearSystem sys{g.edge_count(), {}};
  for (const auto& c : fundamental_cycles(g)) add_cycle_row(sys, c);
  return sys;
}

LinearSystem all_cycles_tension_system(const RibbonGraph& g) {
  LinearSystem sys{g.edge_count(), {}};
  for (const auto& c : cycles(g)) add_cycle_row(sys, c);
  return sys;
}

LinearSystem flow_system(const RibbonGraph& g) {
  LinearSystem sys{g.edge_count(), {}};
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::vector<std::pair<EdgeId, int>> row;
    for (const Dart d : g.vertex_darts(v)) row.emplace_back(g.edge_of(d), g.is_tail_dart(d) ? -1 : 1);
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

LinearSystem local_tension_system(const RibbonGraph& g) {
  const FaceMatrix d(g);
  LinearSystem sys{g.edge_count(), {}};
  for (FaceId f = 0; f < d.rows(); ++f) {
    std::vector<std::pair<EdgeId, int>> row;
    for (EdgeId e = 0; e < d.cols(); ++e) {
      if (d.at(f, e) != 0) row.emplace_back(e, d.at(f, e));
    }
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

LinearSystem balanced_flow_system(const RibbonGraph& g) {
  LinearSystem sys = flow_system(g);
  const RibbonGraph d = dual(g);
  // dual edges keep the primal reference orientation, so the crossing sign
  // of a cocycle edge is the traversal sign of the dual cycle
  for (const auto& c : fundamental_cycles(d)) add_cycle_row(sys, c);
  return sys;
}

bool is_tension_by_potentials(const RibbonGraph& g, std::span<const std::int64_t> x, std::int64_t k) {
  std::vector<std::int64_t> potential(g.vertex_count(), 0);
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<std::vector<std::pair<EdgeId, bool>>> adj(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    adj[g.tail_vertex(e)].emplace_back(e, true);
    adj[g.head_vertex(e)].emplace_back(e, false);
  }
  for (VertexId root = 0; root < g.vertex_count(); ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::queue<VertexId> q;
    q.push(root);
    while (!q.empty()) {
      const VertexId v = q.front();
      q.pop();
      for (const auto& [e, out] : adj[v]) {
        const VertexId w = out ? g.head_vertex(e) : g.tail_vertex(e);
        if (seen[w]) continue;
        seen[w] = true;
        potential[w] = mod(potential[v] + (out ? x[e] : -x[e]), k);
        q.push(w);
      }
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (mod(potential[g.head_vertex(e)] - potential[g.tail_vertex(e)] - x[e], k) != 0) return false;
  }
  return true;
}

namespace {

std::vector<std::int64_t> value_domain(AssignmentMode mode, int k, bool nowhere_zero) {
  std::vector<std::int64_t> d;
  if (mode == AssignmentMode::Residue) {
    for (int v = nowhere_zero ? 1 : 0; v < k; ++v) d.push_back(v);
  } else {
    for (int v = -(k - 1); v <= k - 1; ++v) {
      if (!(nowhere_zero && v == 0)) d.push_back(v);
    }
  }
  return d;
}

void guard_box(std::size_t domain, int variables, const Limits& limits) {
  long double total = 1;
  for (int i = 0; i < variables; ++i) total *= static_cast<long double>(domain);
  if (total > static_cast<long double>(limits.max_assignments)) {
    throw Error(ErrorKind::TooLarge, std::to_string(domain) + "^" + std::to_string(variables) +
                                         " assignments exceed the guard of " +
                                         std::to_string(limits.max_assignments));
  }
}

// Depth-first over the box, checking each row as soon as its last variable
// is assigned.
class SolutionWalker {
 public:
  SolutionWalker(const LinearSystem& sys, std::vector<std::int64_t> domain, bool modular, std::int64_t k)
      : sys_(sys), domain_(std::move(domain)), modular_(modular), k_(k), x_(sys.variables, 0) {
    rows_at_.resize(sys.variables);
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
      const auto& row = sys.rows[r];
      int last = -1;
      for (const auto& [e, c] : row) {
        if (c != 0) last = std::max(last, static_cast<int>(e));
      }
      if (last >= 0) rows_at_[last].push_back(static_cast<int>(r));
    }
  }

  template <class F>
  void run(std::size_t first_lo, std::size_t first_hi, F&& on_solution) {
    if (sys_.variables == 0) {
      on_solution(std::span<const std::int64_t>(x_));
      return;
    }
    descend(0, first_lo, first_hi, on_solution);
  }

 private:
  bool rows_ok(int e) const {
    for (const int r : rows_at_[e]) {
      const std::int64_t s = row_value(sys_.rows[r], x_);
      if (modular_ ? mod(s, k_) != 0 : s != 0) return false;
    }
    return true;
  }

  template <class F>
  void descend(int e, std::size_t lo, std::size_t hi, F& on_solution) {
    for (std::size_t i = lo; i < hi; ++i) {
      x_[e] = domain_[i];
      if (!rows_ok(e)) continue;
      if (e + 1 == sys_.variables) {
        on_solution(std::span<const std::int64_t>(x_));
      } else {
        descend(e + 1, 0, domain_.size(), on_solution);
      }
    }
    x_[e] = 0;
  }

  const LinearSystem& sys_;
  std::vector<std::int64_t> domain_;
  bool modular_;
  std::int64_t k_;
  std::vector<std::int64_t> x_;
  std::vector<std::vector<int>> rows_at_;
};

void check_modulus(int k) {
  if (k < 1) throw Error(ErrorKind::BadModulus, "modulus must be at least 1, got " + std::to_string(k));
}

}  // namespace

void for_each_solution(const LinearSystem& system, AssignmentMode mode, int k, bool nowhere_zero,
                       const std::function<void(std::span<const std::int64_t>)>& visit,
                       const Limits& limits) {
  check_modulus(k);
  auto domain = value_domain(mode, k, nowhere_zero);
  guard_box(domain.size(), system.variables, limits);
  const std::size_t n = domain.size();
  SolutionWalker walker(system, std::move(domain), mode == AssignmentMode::Residue, k);
  walker.run(0, n, visit);
}

std::uint64_t count_solutions(const LinearSystem& system, AssignmentMode mode, int k, bool nowhere_zero,
                              const Limits& limits, int jobs) {
  check_modulus(k);
  const auto domain = value_domain(mode, k, nowhere_zero);
  guard_box(domain.size(), system.variables, limits);
  const bool modular = mode == AssignmentMode::Residue;
  const std::size_t n = domain.size();
  if (jobs <= 1 || system.variables == 0 || n < 2) {
    std::uint64_t count = 0;
    SolutionWalker(system, domain, modular, k).run(0, n, [&](auto) { ++count; });
    return count;
  }
  const auto workers = static_cast<std::size_t>(std::min<std::size_t>(jobs, n));
  std::vector<std::uint64_t> partial(workers, 0);
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      const std::size_t lo = n * w / workers, hi = n * (w + 1) / workers;
      SolutionWalker(system, domain, modular, k).run(lo, hi, [&](auto) { ++partial[w]; });
    });
  }
  for (auto& t : threads) t.join();
  std::uint64_t total = 0;
  for (const auto p : partial) total += p;
  return total;
}

std::uint64_t count_tensions(const RibbonGraph& g, int k, const Limits& limits) {
  return count_solutions(tension_system(g), AssignmentMode::Residue, k, false, limits);
}
std::uint64_t count_nz_tensions(const RibbonGraph& g, int k, const Limits& limits) {
  return count_solutions(tension_system(g), AssignmentMode::Residue, k, true, limits);
}
std::uint64_t count_flows(const RibbonGraph& g, int k, const Limits& limits) {
  return count_solutions(flow_system(g), AssignmentMode::Residue, k, false, limits);
}
std::uint64_t count_nz_flows(const RibbonGraph& g, int k, const Limits& limits) {
  return count_solutions(flow_system(g), AssignmentMode::Residue, k, true, limits);
}
std::uint64_t count_local_tensions(const RibbonGraph& g, int k, const Limits& limits) {
  return count_solutions(local_tension_system(g), AssignmentMode::Residue, k, false, limits);
}
std::uint64_t count_nz_local_tensions(const RibbonGraph& g, int k, const Limits& limits) {
  return count_solutions(local_tension_system(g), AssignmentMode::Residue, k, true, limits);
}
std::uint64_t count_balanced_flows(const RibbonGraph& g, int k, const Limits& limits) {
  return count_solutions(balanced_flow_system(g), AssignmentMode::Residue, k, false, limits);
}

std::uint64_t count_nz_balanced_flows(const RibbonGraph& g, int k, const Limits& limits) {
  const std::uint64_t direct = count_solutions(balanced_flow_system(g), AssignmentMode::Residue, k, true, limits);
  const RibbonGraph d = dual(g);
  std::uint64_t via_dual = 0;
  const LinearSystem unconstrained{d.edge_count(), {}};
  for_each_solution(
      unconstrained, AssignmentMode::Residue, k, true,
      [&](std::span<const std::int64_t> x) { via_dual += is_tension_by_potentials(d, x, k) ? 1 : 0; },
      limits);
  if (direct != via_dual) {
    throw Error(ErrorKind::Internal, "balanced flow counts disagree at k=" + std::to_string(k) + ": " +
                                         std::to_string(direct) + " vs " + std::to_string(via_dual));
  }
  return direct;
}

std::uint64_t count_integral_local_tensions(const RibbonGraph& g, int k, const Limits& limits) {
  return count_solutions(local_tension_system(g), AssignmentMode::BoundedInteger, k, true, limits);
}

std::uint64_t count_integral_flows(const RibbonGraph& g, int k, const Limits& limits) {
  return count_solutions(flow_system(g), AssignmentMode::BoundedInteger, k, true, limits);
}

std::string_view to_string(PolynomialKind kind) {
  switch (kind) {
    case PolynomialKind::Tension: return "tension";
    case PolynomialKind::Flow: return "flow";
    case PolynomialKind::LocalTension: return "local-tension";
    case PolynomialKind::BalancedFlow: return "balanced-flow";
  }
  return "?";
}

PolynomialKind parse_polynomial_kind(std::string_view text) {
  if (text == "tension") return PolynomialKind::Tension;
  if (text == "flow") return PolynomialKind::Flow;
  if (text == "local-tension") return PolynomialKind::LocalTension;
  if (text == "balanced-flow") return PolynomialKind::BalancedFlow;
  throw Error(ErrorKind::Parse, "unknown kind '" + std::string(text) + "'");
}

std::uint64_t count_nowhere_zero(const RibbonGraph& g, PolynomialKind kind, int k, const Limits& limits) {
  switch (kind) {
    case PolynomialKind::Tension: return count_nz_tensions(g, k, limits);
    case PolynomialKind::Flow: return count_nz_flows(g, k, limits);
    case PolynomialKind::LocalTension: return count_nz_local_tensions(g, k, limits);
    case PolynomialKind::BalancedFlow: return count_nz_balanced_flows(g, k, limits);
  }
  return 0;
}

IntegerPolynomial counting_polynomial(const RibbonGraph& g, PolynomialKind kind, const Limits& limits) {
  const int samples = g.edge_count() + 1;
  guard_box(static_cast<std::size_t>(samples + 2), g.edge_count(), limits);
  std::vector<BigInt> counts;
  for (int k = 1; k <= samples; ++k) counts.emplace_back(count_nowhere_zero(g, kind, k, limits));
  auto poly = interpolate(counts);
  for (int k = samples + 1; k <= samples + 2; ++k) {
    const BigInt direct(count_nowhere_zero(g, kind, k, limits));
    if (poly(k) != direct) {
      throw Error(ErrorKind::Internal, std::string(to_string(kind)) + " polynomial " + poly.to_string() +
                                           " misses the direct count " + direct.str() +
                                           " at k=" + std::to_string(k));
    }
  }
  return poly;
}

QuasiPolynomial integral_local_tension_quasipolynomial(const RibbonGraph& g, int max_period,
                                                       const Limits& limits) {
  const LinearSystem sys = local_tension_system(g);
  return fit_quasipolynomial(
      [&](std::int64_t k) {
        return BigInt(count_solutions(sys, AssignmentMode::BoundedInteger, static_cast<int>(k), true, limits));
      },
      g.edge_count(), max_period);
}

}  // namespace surfgraph
