#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "surfgraph/boundary.hpp"
#include "surfgraph/orientation.hpp"

using namespace surfgraph;
using namespace surfgraph::testing;

namespace {

std::uint64_t count(const RibbonGraph& g, OrientationClass c) { return count_class(g, c); }

}  // namespace

TEST(Orientation, ParseAndPrint) {
  const auto o = Orientation::parse("+-+");
  EXPECT_EQ(o.signs(), (std::vector<std::int8_t>{1, -1, 1}));
  EXPECT_EQ(o.to_string(), "+-+");
  EXPECT_EQ(Orientation::parse("+\xE2\x88\x92+"), o);
  EXPECT_EQ(o.reversed_mask(), 2u);
  EXPECT_EQ(Orientation::from_mask(3, 2), o);
  EXPECT_EQ(o.reversed().to_string(), "-+-");
  try {
    Orientation::parse("+x");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
  }
}

TEST(Orientation, ClassNames) {
  for (const auto c : {OrientationClass::AO, OrientationClass::TCO, OrientationClass::BAO, OrientationClass::TBO}) {
    EXPECT_EQ(parse_orientation_class(to_string(c)), c);
  }
  EXPECT_THROW(parse_orientation_class("xyz"), Error);
}

TEST(Acyclic, Triangle) {
  const auto g = triangle();
  EXPECT_FALSE(is_acyclic(g, Orientation::parse("+++")));
  EXPECT_FALSE(is_acyclic(g, Orientation::parse("---")));
  EXPECT_EQ(count(g, OrientationClass::AO), 6u);
}

TEST(Acyclic, LoopsNeverAcyclic) {
  EXPECT_EQ(count(torus(), OrientationClass::AO), 0u);
  EXPECT_EQ(count(contractible_loop(), OrientationClass::AO), 0u);
}

TEST(TotallyCyclic, Triangle) {
  EXPECT_TRUE(is_totally_cyclic(triangle(), Orientation::parse("+++")));
  EXPECT_EQ(count(triangle(), OrientationClass::TCO), 2u);
}

TEST(TotallyCyclic, BridgeNeverAndEdgelessAlways) {
  EXPECT_EQ(count(bridge(), OrientationClass::TCO), 0u);
  EXPECT_TRUE(is_totally_cyclic(edgeless(), Orientation::reference(0)));
}

TEST(BoundaryAcyclic, Torus) { EXPECT_EQ(count(torus(), OrientationClass::BAO), 4u); }

TEST(BoundaryAcyclic, ContractibleLoop) { EXPECT_EQ(count(contractible_loop(), OrientationClass::BAO), 0u); }

TEST(BoundaryAcyclic, TwoMeridianTorusHasEightRegions) {
  EXPECT_EQ(count(two_meridian_torus(), OrientationClass::BAO), 8u);
}

TEST(TotallyBiwalkable, Torus) { EXPECT_EQ(count(torus(), OrientationClass::TBO), 0u); }

TEST(TotallyBiwalkable, Edgeless) { EXPECT_TRUE(is_totally_biwalkable(edgeless(), Orientation::reference(0))); }

TEST(Kite, NamedCocycleIsCoherentUnderReference) {
  // (f2, e4, f3, e5, f4, e2): crossings of e4, e5, e2 agree with the
  // reference orientation, so it is not totally bi-walkable
  EXPECT_FALSE(is_totally_biwalkable_by_cocycles(kite(), Orientation::reference(6)));
}

TEST(EnumerateClass, Counts) {
  struct Row {
    RibbonGraph g;
    std::uint64_t ao, tco, bao, tbo;
  };
  for (const auto& r : {Row{triangle(), 6, 2, 6, 2}, Row{torus(), 0, 4, 4, 0}, Row{edgeless(), 1, 1, 1, 1},
                        Row{edgeless(3), 1, 1, 1, 1}}) {
    EXPECT_EQ(count(r.g, OrientationClass::AO), r.ao);
    EXPECT_EQ(count(r.g, OrientationClass::TCO), r.tco);
    EXPECT_EQ(count(r.g, OrientationClass::BAO), r.bao);
    EXPECT_EQ(count(r.g, OrientationClass::TBO), r.tbo);
  }
}

TEST(EnumerateClass, MaskOrderAndGuard) {
  const auto list = enumerate_class(triangle(), OrientationClass::TCO);
  ASSERT_EQ(list.size(), 2u);
  EXPECT_EQ(list[0].to_string(), "+++");
  EXPECT_EQ(list[1].to_string(), "---");
  Limits tight;
  tight.max_orientation_edges = 2;
  try {
    enumerate_class(triangle(), OrientationClass::AO, tight);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
  }
}

TEST(Predicates, GraphMismatch) {
  const auto o = Orientation::reference(2);
  for (const auto& f : {+[](const RibbonGraph& g, const Orientation& x) { return is_acyclic(g, x); },
                        +[](const RibbonGraph& g, const Orientation& x) { return is_totally_cyclic(g, x); },
                        +[](const RibbonGraph& g, const Orientation& x) { return is_boundary_acyclic(g, x); },
                        +[](const RibbonGraph& g, const Orientation& x) { return is_totally_biwalkable(g, x); }}) {
    try {
      f(triangle(), o);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::GraphMismatch);
    }
  }
  EXPECT_THROW(dual_orientation(triangle(), o), Error);
  EXPECT_THROW(cw_faces(triangle(), o), Error);
}

TEST(DualOrientation, TriangleAoToThetaTco) {
  const auto g = triangle();
  const auto d = dual(g);
  EXPECT_EQ(count(d, OrientationClass::TCO), 6u);
  for (const auto& o : enumerate_class(g, OrientationClass::AO)) {
    EXPECT_TRUE(is_totally_cyclic(d, dual_orientation(g, o)));
  }
}

TEST(DualOrientation, AppliedTwiceIsIdentity) {
  // frozen convention: the dual keeps the reference pairs, so signs carry over
  for (const auto& g : corpus(3)) {
    const auto d = dual(g);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.edge_count()); ++m) {
      const auto o = Orientation::from_mask(g.edge_count(), m);
      EXPECT_EQ(dual_orientation(d, dual_orientation(g, o)), o);
    }
  }
}

TEST(DualOrientation, CrossesFromRightFaceToLeftFace) {
  // dual tail = face on the right of the primal reference edge
  for (const auto& g : {kite(), triangle(), two_meridian_torus()}) {
    const auto d = dual(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      EXPECT_EQ(d.tail_vertex(e), g.tail_face(e));
      EXPECT_EQ(d.head_vertex(e), g.head_face(e));
    }
  }
}

TEST(CwFaces, EdgelessFaceCounts) {
  EXPECT_EQ(cw_faces(edgeless(), Orientation::reference(0)), (FaceSet{0}));
  EXPECT_EQ(tbo_histogram(edgeless()), (CwFaceHistogram{{1, 1}}));
}

TEST(CwFaces, TriangleHistogramTotal) {
  std::uint64_t total = 0;
  for (const auto& [j, n] : tbo_histogram(triangle())) total += n;
  EXPECT_EQ(total, 2u);
  EXPECT_TRUE(tbo_histogram(torus()).empty());
}

TEST(CwFaces, AreSinksOfTheDual) {
  for (const auto& g : corpus(3)) {
    const auto d = dual(g);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.edge_count()); ++m) {
      const auto o = Orientation::from_mask(g.edge_count(), m);
      const auto od = dual_orientation(g, o);
      FaceSet sinks;
      for (VertexId v = 0; v < d.vertex_count(); ++v) {
        bool sink = true;
        for (EdgeId e = 0; e < d.edge_count(); ++e) {
          const auto [t, h] = arc(underlying(d), od, e);
          sink = sink && t != v;
        }
        if (sink) sinks.push_back(v);
      }
      EXPECT_EQ(cw_faces(g, o), sinks);
    }
  }
}

TEST(GeneratingFormula, EdgelessIsQ) {
  EXPECT_EQ(tbo_generating_poly_formula(edgeless()), IntegerPolynomial::monomial(1, 1));
}

TEST(GeneratingFormula, MatchesHistogram) {
  for (const auto& g : {triangle(), kite(), torus(), two_meridian_torus()}) {
    EXPECT_EQ(tbo_generating_poly_formula(g), histogram_polynomial(tbo_histogram(g)));
  }
}

TEST(GeneratingFormula, Guard) {
  Limits tight;
  tight.max_orientation_edges = 3;
  EXPECT_THROW(tbo_generating_poly_formula(kite(), VertexCountReading::Dual, tight), Error);
}

// Properties over every orientation of every corpus map.

TEST(CorpusProperty, PredicatesAgreeWithOracles) {
  for (const auto& g : corpus()) {
    const auto a = underlying(g);
    const OrientationClassifier c(g);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.edge_count()); ++m) {
      const auto o = Orientation::from_mask(g.edge_count(), m);
      EXPECT_EQ(c.is_acyclic(o), acyclic_by_vertex_orders(a, o));
      EXPECT_EQ(is_totally_cyclic_by_cuts(a, o), is_totally_cyclic_by_components(a, o));
      EXPECT_EQ(c.is_totally_cyclic(o), every_edge_on_directed_cycle(a, o));
      EXPECT_EQ(is_boundary_acyclic_by_boundaries(g, o), is_boundary_acyclic_by_duality(g, o));
      EXPECT_EQ(is_totally_biwalkable_by_cocycles(g, o), is_totally_biwalkable_by_duality(g, o));
      EXPECT_EQ(c.is_boundary_acyclic(o), is_boundary_acyclic(g, o));
      EXPECT_EQ(c.is_totally_biwalkable(o), is_totally_biwalkable(g, o));
      if (g.edge_count() <= 3) EXPECT_EQ(c.is_totally_biwalkable(o), totally_biwalkable_by_walks(g, o));
    }
  }
}

TEST(CorpusProperty, InclusionsAndReversal) {
  for (const auto& g : corpus()) {
    const OrientationClassifier c(g);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.edge_count()); ++m) {
      const auto o = Orientation::from_mask(g.edge_count(), m);
      if (c.is_acyclic(o)) EXPECT_TRUE(c.is_boundary_acyclic(o));
      if (c.is_totally_biwalkable(o)) EXPECT_TRUE(c.is_totally_cyclic(o));
      for (const auto cls :
           {OrientationClass::AO, OrientationClass::TCO, OrientationClass::BAO, OrientationClass::TBO}) {
        EXPECT_EQ(c.is_member(o, cls), c.is_member(o.reversed(), cls));
      }
    }
  }
}

TEST(CorpusProperty, DualityBijections) {
  for (const auto& g : corpus()) {
    const auto d = dual(g);
    const OrientationClassifier pc(g), dc(d);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.edge_count()); ++m) {
      const auto o = Orientation::from_mask(g.edge_count(), m);
      const auto od = dual_orientation(g, o);
      EXPECT_EQ(pc.is_boundary_acyclic(o), dc.is_totally_cyclic(od));
      EXPECT_EQ(pc.is_acyclic(o), dc.is_totally_biwalkable(od));
    }
  }
}

TEST(CorpusProperty, PlanarCollapse) {
  for (const auto& g : corpus()) {
    if (!g.is_planar()) continue;
    EXPECT_EQ(enumerate_class(g, OrientationClass::BAO), enumerate_class(g, OrientationClass::AO));
    EXPECT_EQ(enumerate_class(g, OrientationClass::TBO), enumerate_class(g, OrientationClass::TCO));
  }
}
