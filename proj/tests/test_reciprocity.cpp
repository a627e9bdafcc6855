#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "surfgraph/boundary.hpp"
#include "surfgraph/reciprocity.hpp"

using namespace surfgraph;
using namespace surfgraph::testing;

namespace {

BigInt abs_at(const IntegerPolynomial& p, int x) {
  const BigInt v = p(x);
  return v < 0 ? BigInt(-v) : v;
}

}  // namespace

TEST(LocalTensionPairs, TorusTotalsKPlusOneSquared) {
  for (int k = 1; k <= 4; ++k) {
    EXPECT_EQ(reciprocity_pairs_local_tension(torus(), k), static_cast<std::uint64_t>((k + 1) * (k + 1)));
  }
}

TEST(LocalTensionPairs, KOneIsBao) {
  for (const auto& g : {torus(), kite(), triangle(), two_meridian_torus()}) {
    EXPECT_EQ(reciprocity_pairs_local_tension(g, 1), count_class(g, OrientationClass::BAO));
  }
}

TEST(Pairs, EdgelessIsOne) {
  for (int k = 1; k <= 3; ++k) {
    EXPECT_EQ(reciprocity_pairs_tension(edgeless(), k), 1u);
    EXPECT_EQ(reciprocity_pairs_flow(edgeless(), k), 1u);
    EXPECT_EQ(reciprocity_pairs_local_tension(edgeless(), k), 1u);
    EXPECT_EQ(reciprocity_pairs_balanced_flow(edgeless(), k), 1u);
    EXPECT_EQ(integral_local_tension_reciprocity_pairs(edgeless(), k), 1u);
  }
}

TEST(TensionPairs, Bridge) {
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(reciprocity_pairs_tension(bridge(), k), static_cast<std::uint64_t>(k + 1));
}

TEST(FlowPairs, TriangleAtTwo) { EXPECT_EQ(reciprocity_pairs_flow(triangle(), 2), 3u); }

TEST(TensionPairs, TriangleAtTwo) { EXPECT_EQ(reciprocity_pairs_tension(triangle(), 2), 12u); }

TEST(IntegralPairs, KZeroIsBao) {
  for (const auto& g : corpus()) {
    EXPECT_EQ(integral_local_tension_reciprocity_pairs(g, 0), count_class(g, OrientationClass::BAO));
  }
  EXPECT_THROW(integral_local_tension_reciprocity_pairs(torus(), -1), Error);
}

TEST(IntegralPairs, Torus) {
  for (int k = 0; k <= 3; ++k) {
    EXPECT_EQ(integral_local_tension_reciprocity_pairs(torus(), k), static_cast<std::uint64_t>((2 * k + 2) * (2 * k + 2)));
  }
}

TEST(Witness, TorusOrientations) {
  for (const auto& o : enumerate_class(torus(), OrientationClass::BAO)) {
    const auto p = bao_witness_vector(torus(), o);
    for (EdgeId e = 0; e < 2; ++e) EXPECT_EQ(p[e] > 0, o.agrees(e));
  }
}

TEST(Witness, TriangleAcyclic) {
  const auto g = triangle();
  const FaceMatrix d(g);
  for (const auto& o : enumerate_class(g, OrientationClass::AO)) {
    const auto p = bao_witness_vector(g, o);
    for (FaceId f = 0; f < d.rows(); ++f) {
      Rational s = 0;
      for (EdgeId e = 0; e < 3; ++e) s += d.at(f, e) * p[e];
      EXPECT_EQ(s, 0);
    }
  }
}

TEST(Witness, ContractibleLoopIsRejected) {
  for (const char* text : {"+", "-"}) {
    try {
      bao_witness_vector(contractible_loop(), Orientation::parse(text));
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::NotBoundaryAcyclic);
    }
  }
}

TEST(CorpusProperty, ReciprocityIdentities) {
  for (const auto& g : corpus()) {
    const int sign_exponent = g.edge_count() - g.face_count() + g.component_count();
    const auto tau = poly_tension(g);
    const auto phi = poly_flow(g);
    const auto loc = poly_local_tension(g);
    const auto bal = poly_balanced_flow(g);
    for (int k = 1; k <= 3; ++k) {
      EXPECT_EQ(BigInt(reciprocity_pairs_tension(g, k)), abs_at(tau, -k));
      EXPECT_EQ(BigInt(reciprocity_pairs_flow(g, k)), abs_at(phi, -k));
      EXPECT_EQ(BigInt(reciprocity_pairs_balanced_flow(g, k)), abs_at(bal, -k));
      const BigInt signed_loc = sign_exponent % 2 == 0 ? loc(-k) : BigInt(-loc(-k));
      EXPECT_EQ(BigInt(reciprocity_pairs_local_tension(g, k)), signed_loc);
    }
  }
}

TEST(CorpusProperty, WitnessVectors) {
  for (const auto& g : corpus()) {
    for (const auto& o : enumerate_class(g, OrientationClass::BAO)) EXPECT_NO_THROW(bao_witness_vector(g, o));
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.edge_count()); ++m) {
      const auto o = Orientation::from_mask(g.edge_count(), m);
      if (!is_boundary_acyclic(g, o)) EXPECT_THROW(bao_witness_vector(g, o), Error);
    }
  }
}
