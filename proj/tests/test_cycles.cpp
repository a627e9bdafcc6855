#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "surfgraph/cycles.hpp"
#include "surfgraph/operations.hpp"

using namespace surfgraph;
using namespace surfgraph::testing;

namespace {

bool has_cocycle(const std::vector<Cocycle>& cs, const std::vector<FaceId>& faces, const std::vector<EdgeId>& edges) {
  // compare the cyclic token sequences f0 e1 f1 e2 … up to rotation and reversal
  const auto tokens = [](const std::vector<FaceId>& f, const std::vector<EdgeId>& e) {
    std::vector<int> t;
    for (std::size_t i = 0; i < e.size(); ++i) {
      t.push_back(-1 - f[i]);
      t.push_back(e[i]);
    }
    return t;
  };
  const auto want = tokens(faces, edges);
  for (const auto& c : cs) {
    auto t = tokens(c.faces, c.edges());
    if (t.size() != want.size()) continue;
    for (int dir = 0; dir < 2; ++dir) {
      for (std::size_t shift = 0; shift < t.size(); ++shift) {
        std::rotate(t.begin(), t.begin() + 1, t.end());
        if (t == want) return true;
      }
      std::reverse(t.begin(), t.end());
    }
  }
  return false;
}

}  // namespace

TEST(Cycles, ForestHasNone) {
  EXPECT_TRUE(cycles(bridge()).empty());
  EXPECT_TRUE(fundamental_cycles(bridge()).empty());
  EXPECT_TRUE(cycles(edgeless(3)).empty());
}

TEST(Cycles, TriangleHasOne) {
  const auto cs = cycles(triangle());
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].steps.size(), 3u);
  EXPECT_NO_THROW(validate_closed_trail(triangle(), cs[0]));
}

TEST(Cycles, LoopsAndParallelEdges) {
  EXPECT_EQ(cycles(torus()).size(), 2u);
  // theta: three 2-cycles
  EXPECT_EQ(cycles(dual(triangle())).size(), 3u);
  // two meridian loops, the longitude 2-cycle
  EXPECT_EQ(cycles(two_meridian_torus()).size(), 3u);
}

TEST(Cycles, FundamentalCount) {
  for (const auto& g : corpus()) {
    EXPECT_EQ(static_cast<int>(fundamental_cycles(g).size()),
              g.edge_count() - g.vertex_count() + g.component_count());
    for (const auto& c : fundamental_cycles(g)) EXPECT_NO_THROW(validate_closed_trail(g, c));
  }
  EXPECT_EQ(fundamental_cycles(torus()).size(), 2u);
}

TEST(Cocycles, KiteContainsNamedCocycle) {
  const auto g = kite();
  // (f2, e4, f3, e5, f4, e2, f2)
  EXPECT_TRUE(has_cocycle(cocycles(g), {kKiteF2, kKiteF3, kKiteF4}, {3, 4, 1}));
}

TEST(Cocycles, TorusHasTwoLengthOneCocycles) {
  const auto cs = cocycles(torus());
  const auto ones = std::count_if(cs.begin(), cs.end(), [](const auto& c) { return c.steps.size() == 1; });
  EXPECT_EQ(ones, 2);
}

TEST(Cocycles, CorrespondToDualCycles) {
  for (const auto& g : corpus()) EXPECT_EQ(cocycles(g).size(), cycles(dual(g)).size());
}

TEST(Cocycles, FacesAreAdjacentToTheirEdges) {
  for (const auto& g : corpus()) {
    for (const auto& c : cocycles(g)) {
      ASSERT_EQ(c.faces.size(), c.steps.size() + 1);
      EXPECT_EQ(c.faces.front(), c.faces.back());
      for (std::size_t i = 0; i < c.steps.size(); ++i) {
        const EdgeId e = c.steps[i].edge;
        const std::pair<FaceId, FaceId> sides{g.tail_face(e), g.head_face(e)};
        EXPECT_TRUE((sides.first == c.faces[i] && sides.second == c.faces[i + 1]) ||
                    (sides.second == c.faces[i] && sides.first == c.faces[i + 1]));
      }
    }
  }
}

TEST(Separating, PlanarCyclesSeparate) {
  for (const auto& g : corpus()) {
    if (!g.is_planar()) continue;
    for (const auto& c : cycles(g)) EXPECT_TRUE(is_separating(g, c));
  }
}

TEST(Separating, TorusLoopsDoNot) {
  for (const auto& c : cycles(torus())) EXPECT_FALSE(is_separating(torus(), c));
}

TEST(Separating, KiteFaceBoundary) {
  // f1 = e1, e3, e6 as a closed trail at u: e1 is a loop, then e6 out and e3 back
  const auto g = kite();
  Cycle c;
  c.start = 0;
  c.steps = {{0, true}, {5, true}, {2, false}};
  ASSERT_NO_THROW(validate_closed_trail(g, c));
  EXPECT_TRUE(is_separating(g, c));
}

TEST(Separating, InvalidCycle) {
  Cycle c;
  c.start = 0;
  c.steps = {{0, true}};
  try {
    is_separating(triangle(), c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidCycle);
  }
  c.steps = {{7, true}};
  EXPECT_THROW(validate_closed_trail(triangle(), c), Error);
}
