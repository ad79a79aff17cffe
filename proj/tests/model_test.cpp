#include <gtest/gtest.h>

#include "plumb/corpus.hpp"
#include "plumb/errors.hpp"
#include "plumb/linalg.hpp"
#include "plumb/model.hpp"

using namespace plumb;

namespace {

Rational r(long p, long q = 1) { return make_rational(p, q); }

// Intersection of the line through p with direction d and the vertical x = c.
Point meet_vertical(const Point& p, IntVec d, const Rational& c) {
  const Rational t = (c - p.x) / d.x;
  return {c, p.y + t * d.y};
}

Point meet_horizontal(const Point& p, IntVec d, const Rational& c) {
  const Rational t = (c - p.y) / d.y;
  return {p.x + t * d.x, c};
}

}  // namespace

TEST(Split, Examples) {
  const auto g2 = chain({-2, -2});
  const auto s2 = split_self_intersections(g2);
  EXPECT_EQ((s2[{0, Side::V}]), -2);
  EXPECT_EQ((s2[{0, Side::VPrime}]), -2);

  const auto g3 = chain({-2, -2, -2});
  const auto s3 = split_self_intersections(g3);
  EXPECT_EQ((s3[{0, Side::VPrime}]), -1);  // middle vertex, edge 0
  EXPECT_EQ((s3[{1, Side::V}]), -1);       // middle vertex, edge 1

  const auto g5 = chain({-2, -5, -2});
  const auto s5 = split_self_intersections(g5);
  EXPECT_EQ((s5[{0, Side::VPrime}]), -3);  // lower-indexed incidence gets the remainder
  EXPECT_EQ((s5[{1, Side::V}]), -2);

  EXPECT_THROW(split_self_intersections(chain({-4})), Error);
}

TEST(Split, SmallSelfIntersectionIsSpreadEvenly) {
  // s = -1 at valency 2: parts (0, -1); s = 3 at valency 2: parts (2, 1)
  const auto g = chain({-3, -1, -3});
  const auto s = split_self_intersections(g);
  EXPECT_EQ((s[{0, Side::VPrime}]), 0);
  EXPECT_EQ((s[{1, Side::V}]), -1);
  const auto h = chain({-3, 3, -3});
  const auto t = split_self_intersections(h);
  EXPECT_EQ((t[{0, Side::VPrime}]), 2);
  EXPECT_EQ((t[{1, Side::V}]), 1);
}

TEST(Split, SumsToSelfIntersectionAndStaysBelowMinusOneUnderHypothesis) {
  for (const auto& named : standard_corpus(100, 3)) {
    const auto& g = named.graph;
    const auto split = split_self_intersections(g);
    for (std::size_t i = 0; i < g.size(); ++i) {
      long sum = 0;
      for (const auto& inc : incidences_at(g, i)) {
        sum += split[inc];
        if (-g.vertex(i).self_int >= g.valency(i)) EXPECT_LE(split[inc], -1);
      }
      EXPECT_EQ(sum, g.vertex(i).self_int) << named.name;
    }
  }
}

TEST(Offsets, Examples) {
  const auto g = chain({-2, -2});
  const auto x = edge_offsets(g, {1, 1}, split_self_intersections(g));
  EXPECT_EQ((x[{0, Side::V}]), 1);
  EXPECT_EQ((x[{0, Side::VPrime}]), 1);

  const auto h = chain({-5, -2});
  const auto y = edge_offsets(h, weight_vector(h), split_self_intersections(h));
  EXPECT_EQ((y[{0, Side::V}]), 1);
  EXPECT_EQ((y[{0, Side::VPrime}]), 1);

  // a z that does not solve -Qz = a breaks the sum identity
  EXPECT_THROW(edge_offsets(g, {2, 1}, split_self_intersections(g)), InvariantError);
}

TEST(Constants, Chain22) {
  const auto g = chain({-2, -2});
  const auto split = split_self_intersections(g);
  const auto c = choose_constants(g, edge_offsets(g, {1, 1}, split), split);
  EXPECT_EQ(c.epsilon, r(1, 2));
  EXPECT_EQ(c.gamma, r(1, 4));
  EXPECT_EQ(c.delta, r(1, 8));
}

TEST(Constants, PositiveSplitTightensDelta) {
  // middle vertex s = -1, d = 2 splits (0, -1): s + 1 = 1 > 0 on edge 0
  const auto g = chain({-3, -1, -3});
  const auto split = split_self_intersections(g);
  const auto c = choose_constants(g, edge_offsets(g, weight_vector(g), split), split);
  EXPECT_EQ(c.epsilon, r(1, 4));  // min area/d = 1/2
  EXPECT_EQ(c.gamma, r(1, 8));
  EXPECT_EQ(c.delta, r(1, 16));  // (eps - gamma)/2 = 1/16 = gamma/2
  EXPECT_GT(c.epsilon - (split[{0, Side::VPrime}] + 1) * c.delta, c.gamma);

  // s = 3 at valency 2 gives parts (2, 1): (eps - gamma)/(2*3) wins
  const auto h = chain({-6, 3, -6});
  const auto hs = split_self_intersections(h);
  EdgeOffsets fake(h.edges().size());
  fake[{0, Side::V}] = 1;
  fake[{0, Side::VPrime}] = r(1, 2);
  fake[{1, Side::V}] = r(1, 2);
  fake[{1, Side::VPrime}] = 1;
  const auto hc = choose_constants(h, fake, hs);
  EXPECT_EQ(hc.epsilon, r(1, 4));
  EXPECT_EQ(hc.delta, (hc.epsilon - hc.gamma) / 6);
}

TEST(Region, Chain22SubregionCornersFromLineIntersections) {
  const auto g = chain({-2, -2});
  const auto m = build_model(g);
  ASSERT_EQ(m.regions.size(), 1u);
  const auto& reg = m.regions[0];
  EXPECT_EQ(reg.anchor, (Point{1, 1}));

  const std::array<Point, 4> expected{Point{1, r(3, 2)}, Point{1, 2}, Point{r(9, 8), r(7, 4)}, Point{r(9, 8), r(9, 4)}};
  EXPECT_EQ(reg.sub_v.corners, expected);

  // independent route: intersect the two parallel lines with x = z_v and x = z_v + delta
  const IntVec dir{1, 2};
  const Point inner{1, r(3, 2)}, outer{1, 2};
  EXPECT_EQ(meet_vertical(inner, dir, r(9, 8)), reg.sub_v.corners[2]);
  EXPECT_EQ(meet_vertical(outer, dir, r(9, 8)), reg.sub_v.corners[3]);
  const IntVec dir_p{2, 1};
  EXPECT_EQ(meet_horizontal({r(3, 2), 1}, dir_p, r(9, 8)), reg.sub_vprime.corners[2]);
  EXPECT_EQ(meet_horizontal({2, 1}, dir_p, r(9, 8)), reg.sub_vprime.corners[3]);
}

TEST(Region, BoundaryIsClosedCounterClockwise) {
  const auto m = build_model(corpus("star(-5,1;-2,-2;-3)"));
  for (const auto& reg : m.regions) {
    ASSERT_EQ(reg.boundary.size(), 7u);
    Rational twice_area = 0;
    for (std::size_t k = 0; k < reg.boundary.size(); ++k) {
      const auto endpoints = [](const BoundaryPiece& p) {
        if (const auto* s = std::get_if<Segment>(&p)) return std::pair{s->from, s->to};
        const auto& a = std::get<SmoothingArc>(p);
        return std::pair{a.from, a.to};
      };
      const auto [from, to] = endpoints(reg.boundary[k]);
      EXPECT_EQ(to, endpoints(reg.boundary[(k + 1) % reg.boundary.size()]).first);
      twice_area += from.x * to.y - to.x * from.y;
    }
    EXPECT_GT(sgn(twice_area), 0);
    const auto& first = std::get<Segment>(reg.boundary[0]);
    const auto& second = std::get<Segment>(reg.boundary[1]);
    EXPECT_EQ(first.from.x, reg.anchor.x);  // x = z_v
    EXPECT_EQ(second.to.y, reg.anchor.y);   // y = z_v'
  }
}

TEST(Region, FigureTwoClippingLines) {
  // s_{v,e} = 0, s_{v',e} = -1: horizontal and slope-one clipping lines
  const auto g = chain({-2, -2});
  EdgeSplit split(1);
  split[{0, Side::V}] = 0;
  split[{0, Side::VPrime}] = -1;
  const ModelConstants c{r(1, 2), r(1, 4), r(1, 16)};
  const auto reg = build_edge_region(g, 0, {1, 1}, split, c);
  EXPECT_EQ(reg.clip_v.direction, (IntVec{1, 0}));
  EXPECT_EQ(reg.clip_v.through, (Point{1, 2}));
  EXPECT_EQ(reg.clip_vprime.direction, (IntVec{1, 1}));
  EXPECT_EQ(reg.clip_vprime.through, (Point{2, 1}));
  EXPECT_EQ(std::get<Segment>(reg.boundary[6]).direction, (IntVec{-1, 0}));
}

TEST(Transition, Formulas) {
  EdgeSplit split(1);
  split[{0, Side::V}] = 0;
  split[{0, Side::VPrime}] = -1;
  const auto [a, ap] = transition_matrices(split, 0);
  EXPECT_EQ(a.m, (std::array<long, 4>{0, -1, 1, 0}));
  EXPECT_EQ(ap.m, (std::array<long, 4>{-1, 1, 0, 1}));
  for (long s = -7; s <= 7; ++s) {
    split[{0, Side::V}] = s;
    split[{0, Side::VPrime}] = s;
    const auto [b, bp] = transition_matrices(split, 0);
    EXPECT_EQ(b.det(), 1);
    EXPECT_EQ(bp.det(), -1);
    EXPECT_EQ(b.apply(IntVec{1, -s}), (IntVec{0, 1}));
    EXPECT_EQ(bp.apply(IntVec{-s, 1}), (IntVec{0, 1}));
  }
}

TEST(NormalizeCollar, Chain22Rectangle) {
  const auto m = build_model(chain({-2, -2}));
  const auto [a, ap] = transition_matrices(m.split, 0);
  EXPECT_EQ(a.m, (std::array<long, 4>{2, -1, 1, 0}));
  // top corner maps to (x - 2 eps, z_v)
  EXPECT_EQ(a.apply(Point{1, 2}), (Point{0, 1}));
  const auto rect = normalize_collar(a, m.regions[0].sub_v, m.offsets[{0, Side::V}], m.z[0], m.constants);
  EXPECT_EQ(rect, (Rectangle{0, r(1, 2), 1, r(9, 8)}));
  const auto rect_p = normalize_collar(ap, m.regions[0].sub_vprime, m.offsets[{0, Side::VPrime}], m.z[1], m.constants);
  EXPECT_EQ(rect_p, (Rectangle{0, r(1, 2), 1, r(9, 8)}));
}

TEST(NormalizeCollar, WrongTransformIsAnInvariantFailure) {
  const auto m = build_model(chain({-2, -2}));
  const LatticeTransform wrong{{3, -1, 1, 0}};
  EXPECT_THROW(normalize_collar(wrong, m.regions[0].sub_v, m.offsets[{0, Side::V}], m.z[0], m.constants),
               InvariantError);
  EXPECT_THROW(normalize_collar(LatticeTransform{{2, 0, 0, 1}}, m.regions[0].sub_v, 0, 0, m.constants), Error);
}

TEST(Delzant, Examples) {
  for (long s = -6; s <= 6; ++s) EXPECT_TRUE(delzant_corner_check({0, -1}, {1, -s}));
  EXPECT_TRUE(delzant_corner_check({1, 0}, {0, 1}));
  EXPECT_FALSE(delzant_corner_check({1, 0}, {0, -1}));
  EXPECT_THROW(delzant_corner_check({2, 0}, {0, 1}), Error);
  EXPECT_THROW(delzant_corner_check({0, 0}, {0, 1}), Error);
}

TEST(VerifyModel, Chain22Itemization) {
  const auto rep = verify_model(build_model(chain({-2, -2})));
  ASSERT_TRUE(rep.ok());
  ASSERT_EQ(rep.areas.size(), 2u);
  for (const auto& a : rep.areas) {
    EXPECT_EQ(a.surface, r(1, 2));
    EXPECT_EQ(a.disks, 1);
    EXPECT_EQ(a.overlaps, r(-1, 2));
    EXPECT_EQ(a.total, 1);
  }
  for (const auto& e : rep.euler) EXPECT_EQ(e.split_sum, -2);
  int anchor_adjacent = 0;
  for (const auto& c : rep.corners) {
    EXPECT_EQ(c.det, 1);
    anchor_adjacent += c.anchor_adjacent;
  }
  EXPECT_EQ(anchor_adjacent, 2);
  EXPECT_EQ(rep.corners.size(), 5u);
}

TEST(VerifyModel, MiddleOfTripleChain) {
  const auto rep = verify_model(build_model(chain({-2, -2, -2})));
  ASSERT_TRUE(rep.ok());
  EXPECT_EQ(rep.euler[1].split_sum, -2);
  EXPECT_EQ(rep.euler[1].self_int, -2);
}

TEST(VerifyModel, ReportsExactDiscrepancy) {
  auto m = build_model(chain({-2, -2}));
  m.offsets[{0, Side::V}] += r(1, 3);
  const auto rep = verify_model(m);
  ASSERT_FALSE(rep.ok());
  bool found_area = false;
  for (const auto& f : rep.failures) {
    if (f.check == "area") {
      found_area = true;
      EXPECT_EQ(f.discrepancy, r(1, 3));
    }
  }
  EXPECT_TRUE(found_area);

  auto n = build_model(chain({-2, -2}));
  n.split[{0, Side::V}] = -3;
  const auto rep2 = verify_model(n);
  bool found_euler = false;
  for (const auto& f : rep2.failures) {
    if (f.check == "euler") {
      found_euler = true;
      EXPECT_EQ(f.discrepancy, -1);
    }
  }
  EXPECT_TRUE(found_euler);
}

TEST(BuildModel, PreconditionsAndWarnings) {
  EXPECT_THROW(build_model(rational_blowdown(2)), Error);
  EXPECT_THROW(build_model(chain({-1, -1})), Error);
  const auto m = build_model(chain({-2, -2}));
  ASSERT_EQ(m.warnings.size(), 2u);
  EXPECT_EQ(m.warnings[0].code, "collar-nonpositive");
}

TEST(BuildModel, DeterministicAndVerifiesOnRandomGraphs) {
  const auto graphs = standard_corpus(100, 77);
  for (const auto& named : graphs) {
    const auto a = build_model(named.graph);
    const auto b = build_model(named.graph);
    EXPECT_EQ(a, b);
    const auto rep = verify_model(a);
    EXPECT_TRUE(rep.ok()) << named.name << ": " << (rep.failures.empty() ? "" : rep.failures[0].detail);
    EXPECT_EQ(rep.collars.size(), 2 * named.graph.edges().size());
    for (const auto& c : rep.collars) {
      EXPECT_TRUE(c.image.has_value());
      EXPECT_TRUE(c.transform.det() == 1 || c.transform.det() == -1);
      if (c.incidence.side == Side::V) {
        EXPECT_EQ(c.transform.det(), 1);
      }
    }
  }
}
