#pragma once

#include <cstdint>
#include <vector>

#include "surfgraph/counting.hpp"
#include "surfgraph/orientation.hpp"

namespace surfgraph {

/// Pair counts Σ_x |class(G ∘ supp(x))| over ALL assignments x of the kind
/// (zeros allowed) at modulus k:
///   tension        AO  of  G ∖ supp
///   flow           TCO of  the abstract contraction G // supp
///   local-tension  BAO of  G \\ supp
///   balanced-flow  TBO of  the ribbon contraction G / supp
/// Orientation counts are cached by support, so the cost is one box scan
/// plus one class count per distinct support.
std::uint64_t reciprocity_pairs(const RibbonGraph& g, PolynomialKind kind, int k,
                                const Limits& limits = default_limits());

inline std::uint64_t reciprocity_pairs_tension(const RibbonGraph& g, int k) {
  return reciprocity_pairs(g, PolynomialKind::Tension, k);
}
inline std::uint64_t reciprocity_pairs_flow(const RibbonGraph& g, int k) {
  return reciprocity_pairs(g, PolynomialKind::Flow, k);
}
inline std::uint64_t reciprocity_pairs_local_tension(const RibbonGraph& g, int k) {
  return reciprocity_pairs(g, PolynomialKind::LocalTension, k);
}
inline std::uint64_t reciprocity_pairs_balanced_flow(const RibbonGraph& g, int k) {
  return reciprocity_pairs(g, PolynomialKind::BalancedFlow, k);
}

/// Pairs (t, o): t an integer vector with |t(e)| ≤ k and D(G)·t = 0, o a
/// boundary acyclic orientation that agrees with the reference orientation
/// where t > 0 and disagrees where t < 0. k ≥ 0; at k = 0 this is |BAO(G)|.
std::uint64_t integral_local_tension_reciprocity_pairs(const RibbonGraph& g, int k,
                                                        const Limits& limits = default_limits());

/// Sum of the signed edge vectors of all cocycles coherent under `o`, each
/// edge weighted by o(e). Lies in ker D(G), is nowhere zero and has the
/// sign pattern of `o`; these postconditions are checked (Internal).
/// Throws NotBoundaryAcyclic if `o` is not boundary acyclic.
std::vector<Rational> bao_witness_vector(const RibbonGraph& g, const Orientation& o);

}  // namespace surfgraph
