#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"
#include "surfgraph/map_io.hpp"

using namespace surfgraph;
using namespace surfgraph::testing;

namespace {

ErrorKind kind_of(const std::string& text) {
  try {
    parse_map(text);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace

TEST(MapIo, RoundTrip) {
  for (const auto& g : {kite(), torus(), edgeless(2), bridge()}) {
    const auto back = parse_map(map_to_json(g));
    EXPECT_TRUE(back.same_darts(g));
    EXPECT_EQ(back.labels(), g.labels());
  }
}

TEST(MapIo, Errors) {
  EXPECT_EQ(kind_of("{"), ErrorKind::Parse);
  EXPECT_EQ(kind_of("[]"), ErrorKind::Parse);
  EXPECT_EQ(kind_of(R"({"sigma": [[0, 1]]})"), ErrorKind::Parse);
  EXPECT_EQ(kind_of(R"({"sigma": [[0, "a"]], "edges": [[0, 1]]})"), ErrorKind::Parse);
  EXPECT_EQ(kind_of(R"({"sigma": [[0, 1]], "edges": [[0, 1, 2]]})"), ErrorKind::Parse);
  EXPECT_EQ(kind_of(R"({"sigma": [[0, -1]], "edges": [[0, 1]]})"), ErrorKind::Parse);
  EXPECT_EQ(kind_of(R"({"sigma": [[0, 0]], "edges": [[0, 1]]})"), ErrorKind::NonPermutation);
  EXPECT_EQ(kind_of(R"({"sigma": [[0, 1]], "edges": [[0, 0]]})"), ErrorKind::BadPairing);
  EXPECT_EQ(kind_of(R"({"sigma": [[0, 1, 2]], "edges": [[0, 1]]})"), ErrorKind::OddDartCount);
  EXPECT_EQ(kind_of(R"({"sigma": [[0, 1]], "edges": [[0, 1]], "labels": {"edges": [1]}})"), ErrorKind::Parse);
}

TEST(MapIo, DataFiles) {
  const std::string dir = SURFGRAPH_DATA_DIR;
  EXPECT_TRUE(read_map_file(dir + "/torus.json").same_darts(torus()));
  EXPECT_TRUE(read_map_file(dir + "/kite.json").same_darts(kite()));
  EXPECT_EQ(read_map_file(dir + "/kite.json").labels(), kite().labels());
  EXPECT_TRUE(read_map_file(dir + "/two_meridian_torus.json").same_darts(two_meridian_torus()));
  EXPECT_TRUE(read_map_file(dir + "/edgeless.json").same_darts(edgeless()));
  EXPECT_THROW(read_map_file(dir + "/missing.json"), Error);
}

TEST(MapIo, Corpus) {
  std::stringstream s;
  write_corpus(s, corpus(3));
  s << "\n\n";
  const auto back = read_corpus(s);
  ASSERT_EQ(back.size(), corpus(3).size());
  for (std::size_t i = 0; i < back.size(); ++i) EXPECT_TRUE(back[i].same_darts(corpus(3)[i]));
}

TEST(MapIo, Serialization) {
  EXPECT_EQ(polynomial_to_json(IntegerPolynomial({1, -2, 1})), "[1,-2,1]");
  EXPECT_EQ(polynomial_to_json(IntegerPolynomial()), "[]");
  EXPECT_EQ(quasipolynomial_to_json(QuasiPolynomial(1, {{Rational(1, 2), 3}})),
            R"({"constituents":[["1/2","3"]],"period":1})");
  EXPECT_EQ(histogram_to_json({{1, 2}, {3, 4}}), R"({"1":2,"3":4})");
  EXPECT_EQ(rational_vector_to_json({Rational(-1, 3)}), R"(["-1/3"])");
}
