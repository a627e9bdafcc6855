#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "surfgraph/error.hpp"
#include "surfgraph/polynomial.hpp"
#include "surfgraph/ribbon_graph.hpp"

namespace surfgraph {

/// How edge values are drawn: residues {0,…,k−1} of Z_k, or integers with
/// |value| < k.
enum class AssignmentMode { Residue, BoundedInteger };

struct EdgeAssignment {
  AssignmentMode mode = AssignmentMode::Residue;
  int k = 1;
  std::vector<std::int64_t> values;

  /// Bit e set ⇔ values[e] ≠ 0.
  std::uint64_t support_mask() const;
  std::vector<EdgeId> support() const;
};

/// Homogeneous linear conditions Σ coeff·x(e) = 0 (over Z_k or over Z).
struct LinearSystem {
  int variables = 0;
  std::vector<std::vector<std::pair<EdgeId, int>>> rows;

  bool holds_mod(std::span<const std::int64_t> x, std::int64_t k) const;
  bool holds_exactly(std::span<const std::int64_t> x) const;
};

/// Signed sums over the fundamental cycles.
LinearSystem tension_system(const RibbonGraph& g);
/// Signed sums over every simple cycle (oracle for tension_system).
LinearSystem all_cycles_tension_system(const RibbonGraph& g);
/// In-flow minus out-flow at every vertex.
LinearSystem flow_system(const RibbonGraph& g);
/// Rows of the face matrix.
LinearSystem local_tension_system(const RibbonGraph& g);
/// Flow rows plus signed sums over the cocycles dual to the fundamental
/// cycles of the dual (crossing signs transported by the dual orientation).
LinearSystem balanced_flow_system(const RibbonGraph& g);

/// x is a Z_k-tension iff potentials propagated along a spanning forest
/// reproduce every edge value (independent of the cycle-based check).
bool is_tension_by_potentials(const RibbonGraph& g, std::span<const std::int64_t> x, std::int64_t k);

/// Calls `visit` on every assignment in the mode's box satisfying `system`
/// (mod k for residues, exactly for bounded integers), optionally
/// restricted to nowhere-zero vectors. Visits in lexicographic order.
/// Throws BadModulus (k < 1) or TooLarge (box exceeds limits.max_assignments).
void for_each_solution(const LinearSystem& system, AssignmentMode mode, int k, bool nowhere_zero,
                       const std::function<void(std::span<const std::int64_t>)>& visit,
                       const Limits& limits = default_limits());

/// Counts the same set. `jobs` > 1 splits the range of the first variable
/// across threads; the result does not depend on `jobs`.
std::uint64_t count_solutions(const LinearSystem& system, AssignmentMode mode, int k, bool nowhere_zero,
                              const Limits& limits = default_limits(), int jobs = 1);

std::uint64_t count_tensions(const RibbonGraph& g, int k, const Limits& limits = default_limits());
std::uint64_t count_nz_tensions(const RibbonGraph& g, int k, const Limits& limits = default_limits());
std::uint64_t count_flows(const RibbonGraph& g, int k, const Limits& limits = default_limits());
std::uint64_t count_nz_flows(const RibbonGraph& g, int k, const Limits& limits = default_limits());
std::uint64_t count_local_tensions(const RibbonGraph& g, int k, const Limits& limits = default_limits());
std::uint64_t count_nz_local_tensions(const RibbonGraph& g, int k, const Limits& limits = default_limits());
std::uint64_t count_balanced_flows(const RibbonGraph& g, int k, const Limits& limits = default_limits());
/// Runs the vertex-plus-cocycle count and the dual-tension count (potential
/// check on the dual); throws Internal if they differ.
std::uint64_t count_nz_balanced_flows(const RibbonGraph& g, int k, const Limits& limits = default_limits());

/// Nowhere-zero vectors with |t(e)| < k satisfying the face conditions over Z.
std::uint64_t count_integral_local_tensions(const RibbonGraph& g, int k,
                                            const Limits& limits = default_limits());
/// Nowhere-zero integer flows with |f(e)| < k.
std::uint64_t count_integral_flows(const RibbonGraph& g, int k, const Limits& limits = default_limits());

enum class PolynomialKind { Tension, Flow, LocalTension, BalancedFlow };
std::string_view to_string(PolynomialKind kind);
PolynomialKind parse_polynomial_kind(std::string_view text);

/// Nowhere-zero count of the given kind at modulus k.
std::uint64_t count_nowhere_zero(const RibbonGraph& g, PolynomialKind kind, int k,
                                 const Limits& limits = default_limits());

/// Interpolates counts at k = 1 … |E|+1 and checks k = |E|+2, |E|+3 against
/// direct counts (Internal on mismatch).
IntegerPolynomial counting_polynomial(const RibbonGraph& g, PolynomialKind kind,
                                      const Limits& limits = default_limits());
inline IntegerPolynomial poly_tension(const RibbonGraph& g) { return counting_polynomial(g, PolynomialKind::Tension); }
inline IntegerPolynomial poly_flow(const RibbonGraph& g) { return counting_polynomial(g, PolynomialKind::Flow); }
inline IntegerPolynomial poly_local_tension(const RibbonGraph& g) {
  return counting_polynomial(g, PolynomialKind::LocalTension);
}
inline IntegerPolynomial poly_balanced_flow(const RibbonGraph& g) {
  return counting_polynomial(g, PolynomialKind::BalancedFlow);
}

/// Fits the integral local tension counts with degree bound |E|.
QuasiPolynomial integral_local_tension_quasipolynomial(const RibbonGraph& g, int max_period = 6,
                                                       const Limits& limits = default_limits());

}  // namespace surfgraph
