#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "surfgraph/boundary.hpp"

using namespace surfgraph;
using namespace surfgraph::testing;

TEST(Boundary, KiteF1F3) {
  const FaceId f[] = {kKiteF1, kKiteF3};
  // e3, e4, e5, e6
  EXPECT_EQ(boundary(kite(), f), (EdgeSet{2, 3, 4, 5}));
}

TEST(Boundary, AllFacesIsEmpty) {
  for (const auto& g : {kite(), triangle(), two_meridian_torus()}) {
    FaceSet all;
    for (FaceId f = 0; f < g.face_count(); ++f) all.push_back(f);
    EXPECT_TRUE(boundary(g, all).empty());
    EXPECT_TRUE(boundary(g, {}).empty());
  }
}

TEST(Boundary, TorusSingleFaceIsEmpty) {
  const FaceId f[] = {0};
  EXPECT_TRUE(boundary(torus(), f).empty());
}

TEST(Boundary, UnknownFace) {
  const FaceId f[] = {4};
  try {
    boundary(kite(), f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownFace);
  }
  EXPECT_THROW(signed_boundary(kite(), f, Orientation::reference(6)), Error);
}

TEST(SignedBoundary, KiteF1F3) {
  const FaceId f[] = {kKiteF1, kKiteF3};
  EXPECT_EQ(signed_boundary(kite(), f, Orientation::reference(6)), (SignedBoundaryVector{0, 0, 1, -1, 1, -1}));
}

TEST(SignedBoundary, EmptyFaceSetIsZero) {
  EXPECT_EQ(signed_boundary(kite(), {}, Orientation::reference(6)), SignedBoundaryVector(6, 0));
}

TEST(SignedBoundary, ReversalNegates) {
  const auto g = kite();
  const auto o = Orientation::parse("+-+--+");
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    FaceSet f;
    for (FaceId x = 0; x < 4; ++x) {
      if (mask >> x & 1) f.push_back(x);
    }
    auto a = signed_boundary(g, f, o);
    const auto b = signed_boundary(g, f, o.reversed());
    for (auto& v : a) v = -v;
    EXPECT_EQ(a, b);
  }
}

TEST(SignedBoundary, OrientationMismatch) {
  const FaceId f[] = {0};
  try {
    signed_boundary(kite(), f, Orientation::reference(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GraphMismatch);
  }
}

TEST(FaceMatrix, TwoMeridianTorusExample) {
  const FaceMatrix d(two_meridian_torus());
  ASSERT_EQ(d.rows(), 2);
  ASSERT_EQ(d.cols(), 4);
  // (1,0,1,0) and (−1,0,−1,0) up to the order of the rows
  std::vector<std::vector<int>> rows;
  for (FaceId f = 0; f < 2; ++f) rows.emplace_back(d.row(f).begin(), d.row(f).end());
  std::sort(rows.begin(), rows.end());
  EXPECT_EQ(rows[0], (std::vector<int>{-1, 0, -1, 0}));
  EXPECT_EQ(rows[1], (std::vector<int>{1, 0, 1, 0}));
}

TEST(FaceMatrix, TorusIsZero) {
  const FaceMatrix d(torus());
  ASSERT_EQ(d.rows(), 1);
  ASSERT_EQ(d.cols(), 2);
  EXPECT_EQ(d.at(0, 0), 0);
  EXPECT_EQ(d.at(0, 1), 0);
}

TEST(FaceMatrix, ContractibleLoop) {
  const FaceMatrix d(contractible_loop());
  ASSERT_EQ(d.rows(), 2);
  EXPECT_EQ(d.at(0, 0) * d.at(1, 0), -1);
}

TEST(FaceMatrix, KiteRows) {
  // every edge borders two distinct faces: one +1 and one −1 per column
  const FaceMatrix d(kite());
  for (EdgeId e = 0; e < 6; ++e) {
    int nonzero = 0;
    for (FaceId f = 0; f < 4; ++f) nonzero += d.at(f, e) != 0;
    EXPECT_EQ(nonzero, 2);
  }
  EXPECT_EQ(d.rank(), 3);
}

TEST(CorpusProperty, FaceMatrixInvariants) {
  for (const auto& g : corpus()) {
    const FaceMatrix d(g);
    for (const int s : d.column_sums()) EXPECT_EQ(s, 0);
    EXPECT_EQ(d.rank(), g.face_count() - g.component_count());
    const auto ref = Orientation::reference(g.edge_count());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.face_count()); ++mask) {
      FaceSet f;
      for (FaceId x = 0; x < g.face_count(); ++x) {
        if (mask >> x & 1) f.push_back(x);
      }
      const auto sum = d.row_sum(f);
      EXPECT_EQ(signed_boundary(g, f, ref), sum);
      const auto b = boundary(g, f);
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        EXPECT_EQ(sum[e] != 0, std::binary_search(b.begin(), b.end(), e));
      }
    }
  }
}
