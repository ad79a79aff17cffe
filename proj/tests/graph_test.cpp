#include <gtest/gtest.h>

#include "plumb/corpus.hpp"
#include "plumb/errors.hpp"
#include "plumb/graph.hpp"
#include "plumb/random.hpp"

using namespace plumb;

namespace {

const char* kChain22 = "vertex a genus=0 self=-2 area=1\nvertex b genus=0 self=-2 area=1\nedge a b\n";

}  // namespace

TEST(ParseGraph, ChainOfTwo) {
  const auto g = parse_graph(kChain22);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g.vertex(0).id, "a");
  EXPECT_EQ(g.vertex(1).self_int, -2);
  ASSERT_EQ(g.edges().size(), 1u);
  EXPECT_EQ(intersection_matrix(g), (RationalMatrix{{-2, 1}, {1, -2}}));
}

TEST(ParseGraph, CommentsBlankLinesAndDefaultArea) {
  const auto g = parse_graph("# header\n\nvertex a genus=1 self=-5   # trailing\n  vertex b self=-3 genus=0 area=7/3\nedge b a");
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g.vertex(0).area_hat, Rational(1));
  EXPECT_EQ(g.vertex(0).genus, 1);
  EXPECT_EQ(g.vertex(1).area_hat, make_rational(7, 3));
  EXPECT_EQ(g.edges().front().a, 1u);
}

TEST(ParseGraph, RejectsSelfLoop) {
  try {
    parse_graph("vertex a genus=0 self=-1 area=1\nedge a a");
    FAIL() << "self-loop accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("self-loop"), std::string::npos);
  }
}

TEST(ParseGraph, RejectsNonPositiveArea) {
  try {
    parse_graph("vertex a genus=0 self=-2 area=0");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 31u);
    EXPECT_NE(std::string(e.what()).find("non-positive area"), std::string::npos);
  }
  EXPECT_THROW(parse_graph("vertex a genus=0 self=-2 area=-1"), ParseError);
}

TEST(ParseGraph, ReportsOtherErrorsWithPosition) {
  EXPECT_THROW(parse_graph("vertex a genus=-1 self=-2"), ParseError);
  EXPECT_THROW(parse_graph("vertex a genus=0 self=-2\nvertex a genus=0 self=-3"), ParseError);
  EXPECT_THROW(parse_graph("vertex a genus=0 self=-2\nedge a b"), ParseError);
  EXPECT_THROW(parse_graph("vertex a genus=0"), ParseError);
  EXPECT_THROW(parse_graph("vertex a genus=0 self=x"), ParseError);
  EXPECT_THROW(parse_graph("vertex a genus=0 self=-2 colour=red"), ParseError);
  EXPECT_THROW(parse_graph("vertex a genus=0 self=-2 self=-3"), ParseError);
  EXPECT_THROW(parse_graph("node a"), ParseError);
  try {
    parse_graph("vertex a genus=0 self=-2\n\n  edge a zz");
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 10u);
  }
}

TEST(RenderGraph, CanonicalLines) {
  EXPECT_EQ(render_graph(parse_graph(kChain22)), kChain22);
  EXPECT_EQ(render_graph(PlumbingGraph{}), "");
  const auto dbl = parse_graph("vertex a genus=0 self=-3\nvertex b genus=0 self=-3\nedge a b\nedge a b");
  EXPECT_EQ(render_graph(dbl),
            "vertex a genus=0 self=-3 area=1\nvertex b genus=0 self=-3 area=1\nedge a b\nedge a b\n");
}

TEST(IntersectionMatrix, Examples) {
  EXPECT_EQ(intersection_matrix(chain({-4})), (RationalMatrix{{-4}}));
  // triangle: one edge per pair
  const auto tri = parse_graph(
      "vertex a genus=0 self=-3\nvertex b genus=0 self=-3\nvertex c genus=0 self=-3\nedge a b\nedge b c\nedge c a");
  EXPECT_EQ(intersection_matrix(tri), (RationalMatrix{{-3, 1, 1}, {1, -3, 1}, {1, 1, -3}}));
}

TEST(Valency, CountsEndpointsWithMultiplicity) {
  const auto g = parse_graph(kChain22);
  EXPECT_EQ(valency(g, "a"), 1);
  EXPECT_EQ(valency(chain({-4}), "v1"), 0);
  const auto dbl = parse_graph("vertex a genus=0 self=-3\nvertex b genus=0 self=-3\nedge a b\nedge b a");
  EXPECT_EQ(valency(dbl, "a"), 2);
  EXPECT_THROW(valency(g, "zz"), Error);
}

TEST(IsTree, Examples) {
  EXPECT_TRUE(is_tree(parse_graph(kChain22)));
  EXPECT_FALSE(is_tree(parse_graph("vertex a genus=0 self=-3\nvertex b genus=0 self=-3\nedge a b\nedge a b")));
  EXPECT_FALSE(is_tree(parse_graph("vertex a genus=0 self=-3\nvertex b genus=0 self=-3")));
  EXPECT_TRUE(is_tree(chain({-4})));
  EXPECT_TRUE(is_tree(corpus("star(-4,0;-2;-2,-2;-3)")));
}

TEST(Validate, Examples) {
  const auto ok = validate(parse_graph(kChain22));
  EXPECT_TRUE(ok.violations.empty());
  EXPECT_TRUE(ok.warnings.empty());

  const auto single = validate(chain({-4}));
  EXPECT_TRUE(single.ok());
  ASSERT_EQ(single.warnings.size(), 1u);
  EXPECT_EQ(single.warnings[0].code, "isolated-vertex");
  EXPECT_NE(single.warnings[0].message.find("model construction unavailable"), std::string::npos);
}

TEST(Validate, AuditsUncheckedParts) {
  const PlumbingGraph bad({{"a", -1, -2, 1}, {"a", 0, -2, 0}}, {{0, 0}, {0, 5}});
  const auto r = validate(bad);
  std::vector<std::string> codes;
  for (const auto& d : r.violations) codes.push_back(d.code);
  // vertices in order, then edges in order
  EXPECT_EQ(codes, (std::vector<std::string>{"negative-genus", "duplicate-id", "non-positive-area", "self-loop",
                                             "unknown-endpoint"}));
}

// Random multigraphs: round-trip, symmetry, handshake, tree => 0/1 off-diagonals.
TEST(GraphProperties, RandomMultigraphs) {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    PlumbingGraph g;
    const long n = rng.uniform(1, 7);
    for (long i = 0; i < n; ++i) {
      g.add_vertex({"x" + std::to_string(i), rng.uniform(0, 2), rng.uniform(-9, 3),
                    make_rational(rng.uniform(1, 9), rng.uniform(1, 5))});
    }
    const long m = rng.uniform(0, 8);
    for (long k = 0; k < m && n > 1; ++k) {
      const long a = rng.uniform(0, n - 1);
      long b = rng.uniform(0, n - 2);
      if (b >= a) ++b;
      g.add_edge(g.vertex(static_cast<std::size_t>(a)).id, g.vertex(static_cast<std::size_t>(b)).id);
    }
    EXPECT_EQ(parse_graph(render_graph(g)), g);

    const auto q = intersection_matrix(g);
    EXPECT_TRUE(q.is_symmetric());
    long total_valency = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      total_valency += g.valency(i);
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (i != j) EXPECT_GE(sgn(q(i, j)), 0);
      }
    }
    EXPECT_EQ(total_valency, 2 * static_cast<long>(g.edges().size()));
    if (is_tree(g)) {
      for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) {
          if (i != j) EXPECT_TRUE(q(i, j) == 0 || q(i, j) == 1);
        }
      }
    }
  }
}
