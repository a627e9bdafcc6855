#include "surfgraph/reciprocity.hpp"

#include <string>
#include <unordered_map>

#include "surfgraph/boundary.hpp"
#include "surfgraph/cycles.hpp"
#include "surfgraph/operations.hpp"

namespace surfgraph {

namespace {

LinearSystem system_for(const RibbonGraph& g, PolynomialKind kind) {
  switch (kind) {
    case PolynomialKind::Tension: return tension_system(g);
    case PolynomialKind::Flow: return flow_system(g);
    case PolynomialKind::LocalTension: return local_tension_system(g);
    case PolynomialKind::BalancedFlow: return balanced_flow_system(g);
  }
  throw Error(ErrorKind::Internal, "unhandled kind");
}

std::uint64_t class_count_on_minor(const RibbonGraph& g, PolynomialKind kind, const EdgeSet& supp,
                                   const Limits& limits) {
  switch (kind) {
    case PolynomialKind::Tension: return count_class(delete_edges(g, supp), OrientationClass::AO, limits);
    case PolynomialKind::Flow:
      return count_class(abstract_contract(underlying(g), supp), OrientationClass::TCO, limits);
    case PolynomialKind::LocalTension:
      return count_class(double_slash(g, supp), OrientationClass::BAO, limits);
    case PolynomialKind::BalancedFlow:
      return count_class(contract_edges(g, supp), OrientationClass::TBO, limits);
  }
  throw Error(ErrorKind::Internal, "unhandled kind");
}

}  // namespace

std::uint64_t reciprocity_pairs(const RibbonGraph& g, PolynomialKind kind, int k, const Limits& limits) {
  const LinearSystem sys = system_for(g, kind);
  std::unordered_map<std::uint64_t, std::uint64_t> by_support;
  for_each_solution(
      sys, AssignmentMode::Residue, k, false,
      [&](std::span<const std::int64_t> x) {
        std::uint64_t mask = 0;
        for (std::size_t e = 0; e < x.size(); ++e) {
          if (x[e] != 0) mask |= std::uint64_t{1} << e;
        }
        ++by_support[mask];
      },
      limits);
  std::uint64_t total = 0;
  for (const auto& [mask, multiplicity] : by_support) {
    EdgeSet supp;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (mask >> e & 1) supp.push_back(e);
    }
    total += multiplicity * class_count_on_minor(g, kind, supp, limits);
  }
  return total;
}

std::uint64_t integral_local_tension_reciprocity_pairs(const RibbonGraph& g, int k, const Limits& limits) {
  if (k < 0) throw Error(ErrorKind::BadModulus, "k must be nonnegative, got " + std::to_string(k));
  std::vector<std::uint64_t> bao;
  for (const auto& o : enumerate_class(g, OrientationClass::BAO, limits)) bao.push_back(o.reversed_mask());
  // (support, negative part) -> compatible orientation count
  std::unordered_map<std::uint64_t, std::unordered_map<std::uint64_t, std::uint64_t>> seen;
  std::uint64_t total = 0;
  for_each_solution(
      local_tension_system(g), AssignmentMode::BoundedInteger, k + 1, false,
      [&](std::span<const std::int64_t> t) {
        std::uint64_t supp = 0, neg = 0;
        for (std::size_t e = 0; e < t.size(); ++e) {
          if (t[e] != 0) supp |= std::uint64_t{1} << e;
          if (t[e] < 0) neg |= std::uint64_t{1} << e;
        }
        auto [it, fresh] = seen[supp].try_emplace(neg, 0);
        if (fresh) {
          for (const auto m : bao) it->second += (m & supp) == neg ? 1 : 0;
        }
        total += it->second;
      },
      limits);
  return total;
}

std::vector<Rational> bao_witness_vector(const RibbonGraph& g, const Orientation& o) {
  if (!is_boundary_acyclic(g, o)) {
    throw Error(ErrorKind::NotBoundaryAcyclic, o.to_string() + " has a coherently oriented boundary");
  }
  std::vector<Rational> p(g.edge_count(), Rational(0));
  for (const auto& c : cocycles(g)) {
    const int first = o.sign(c.steps[0].edge) * c.crossing(0);
    bool coherent = true;
    for (std::size_t i = 1; i < c.steps.size() && coherent; ++i) {
      coherent = o.sign(c.steps[i].edge) * c.crossing(i) == first;
    }
    if (!coherent) continue;
    for (const auto& s : c.steps) p[s.edge] += o.sign(s.edge);
  }

  const FaceMatrix d(g);
  for (FaceId f = 0; f < d.rows(); ++f) {
    Rational s = 0;
    for (EdgeId e = 0; e < d.cols(); ++e) s += d.at(f, e) * p[e];
    if (s != 0) throw Error(ErrorKind::Internal, "witness vector leaves the kernel at face " + std::to_string(f));
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (p[e] == 0 || (p[e] > 0) != o.agrees(e)) {
      throw Error(ErrorKind::Internal, "witness vector sign mismatch at edge " + std::to_string(e));
    }
  }
  return p;
}

}  // namespace surfgraph
