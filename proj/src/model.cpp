#include "plumb/model.hpp"

#include <numeric>

#include "plumb/errors.hpp"
#include "plumb/linalg.hpp"

namespace plumb {

std::vector<Incidence> incidences_at(const PlumbingGraph& g, std::size_t vertex) {
  std::vector<Incidence> out;
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto& e = g.edges()[k];
    if (e.lo() == vertex) out.push_back({k, Side::V});
    if (e.hi() == vertex) out.push_back({k, Side::VPrime});
  }
  return out;
}

Point LatticeTransform::apply(const Point& p) const {
  return {m[0] * p.x + m[1] * p.y, m[2] * p.x + m[3] * p.y};
}

IntVec LatticeTransform::apply(const IntVec& v) const {
  return {m[0] * v.x + m[1] * v.y, m[2] * v.x + m[3] * v.y};
}

namespace {

void require_no_isolated(const PlumbingGraph& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.valency(i) == 0) {
      throw Error("isolated vertex '" + g.vertex(i).id + "': the model needs one collar per edge");
    }
  }
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Primitive integer direction of a nonzero rational displacement.
IntVec primitive_direction(const Point& from, const Point& to) {
  const Rational dx = to.x - from.x;
  const Rational dy = to.y - from.y;
  if (sgn(dx) == 0 && sgn(dy) == 0) throw InvariantError("degenerate boundary segment");
  Integer den;
  mpz_lcm(den.get_mpz_t(), dx.get_den_mpz_t(), dy.get_den_mpz_t());
  Integer ix = dx.get_num() * (den / dx.get_den());
  Integer iy = dy.get_num() * (den / dy.get_den());
  Integer g;
  mpz_gcd(g.get_mpz_t(), ix.get_mpz_t(), iy.get_mpz_t());
  ix /= g;
  iy /= g;
  if (!ix.fits_slong_p() || !iy.fits_slong_p()) throw InvariantError("boundary direction overflows");
  return {ix.get_si(), iy.get_si()};
}

Segment segment(PieceKind kind, const Point& from, const Point& to) {
  return {kind, from, to, primitive_direction(from, to)};
}

long gcd_abs(long a, long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

}  // namespace

EdgeSplit split_self_intersections(const PlumbingGraph& g) {
  require_no_isolated(g);
  EdgeSplit split(g.edges().size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto incs = incidences_at(g, i);
    const long d = static_cast<long>(incs.size());
    const long s = g.vertex(i).self_int;
    for (long k = 0; k < d; ++k) {
      long part;
      if (-s >= d) {
        const long surplus = -s - d;
        const long share = surplus / d + (k < surplus % d ? 1 : 0);
        part = -1 - share;
      } else {
        const long q = floor_div(s, d);
        const long r = s - q * d;
        part = q + (k < r ? 1 : 0);
      }
      split[incs[static_cast<std::size_t>(k)]] = part;
    }
  }
  return split;
}

EdgeOffsets edge_offsets(const PlumbingGraph& g, const RationalVector& z, const EdgeSplit& split) {
  if (z.size() != g.size()) throw Error("weight vector has wrong length");
  EdgeOffsets offsets(g.edges().size());
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto& e = g.edges()[k];
    for (Side side : {Side::V, Side::VPrime}) {
      const std::size_t v = endpoint(e, side);
      const std::size_t w = endpoint(e, other(side));
      offsets[{k, side}] = -split[{k, side}] * z[v] - z[w];
    }
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    Rational sum = 0;
    for (const auto& inc : incidences_at(g, i)) sum += offsets[inc];
    if (sum != g.vertex(i).area_hat) {
      throw InvariantError("offset sum at '" + g.vertex(i).id + "' is " + format_rational(sum) +
                           ", expected " + format_rational(g.vertex(i).area_hat));
    }
  }
  return offsets;
}

ModelConstants choose_constants(const PlumbingGraph& g, const EdgeOffsets& offsets, const EdgeSplit& split) {
  require_no_isolated(g);
  std::optional<Rational> min_ratio;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Rational ratio = g.vertex(i).area_hat / g.valency(i);
    if (!min_ratio || ratio < *min_ratio) min_ratio = ratio;
  }
  ModelConstants c;
  if (!min_ratio) return c;
  c.epsilon = *min_ratio / 2;
  c.gamma = c.epsilon / 2;
  c.delta = c.gamma / 2;
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    for (Side side : {Side::V, Side::VPrime}) {
      const long lift = split[{k, side}] + 1;
      if (lift > 0) {
        const Rational bound = (c.epsilon - c.gamma) / (2 * lift);
        if (bound < c.delta) c.delta = bound;
      }
    }
  }

  if (!(c.gamma < c.epsilon) || sgn(c.gamma) <= 0 || sgn(c.delta) <= 0) {
    throw InvariantError("model constants are not ordered 0 < gamma < eps, delta > 0");
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    Rational slack = 0;
    for (const auto& inc : incidences_at(g, i)) slack += offsets[inc] - c.epsilon;
    if (sgn(slack) <= 0) throw InvariantError("surface area at '" + g.vertex(i).id + "' is not positive");
  }
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    for (Side side : {Side::V, Side::VPrime}) {
      if (!(c.epsilon - (split[{k, side}] + 1) * c.delta > c.gamma)) {
        throw InvariantError("clipping line misses the level-set zone at edge " + std::to_string(k));
      }
    }
  }
  return c;
}

std::vector<Diagnostic> collar_warnings(const PlumbingGraph& g, const EdgeOffsets& offsets,
                                        const ModelConstants& consts) {
  std::vector<Diagnostic> out;
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    for (Side side : {Side::V, Side::VPrime}) {
      const Rational lo = offsets[{k, side}] - 2 * consts.epsilon;
      if (sgn(lo) <= 0) {
        const auto& v = g.vertex(endpoint(g.edges()[k], side));
        out.push_back({"collar-nonpositive",
                       "collar of '" + v.id + "' on edge " + std::to_string(k) + " starts at x - 2eps = " +
                           format_rational(lo) + " <= 0"});
      }
    }
  }
  return out;
}

ToricRegion build_edge_region(const PlumbingGraph& g, std::size_t edge, const RationalVector& z,
                              const EdgeSplit& split, const ModelConstants& consts) {
  if (edge >= g.edges().size()) throw Error("edge index out of range");
  if (z.size() != g.size()) throw Error("weight vector has wrong length");
  const auto& e = g.edges()[edge];
  ToricRegion r;
  r.edge = edge;
  r.vertex_v = e.lo();
  r.vertex_vprime = e.hi();
  r.split_v = split[{edge, Side::V}];
  r.split_vprime = split[{edge, Side::VPrime}];
  r.epsilon = consts.epsilon;
  r.gamma = consts.gamma;
  r.delta = consts.delta;

  const Rational& zv = z[r.vertex_v];
  const Rational& zw = z[r.vertex_vprime];
  const Rational& eps = consts.epsilon;
  const Rational& gam = consts.gamma;
  const Rational& del = consts.delta;
  const long s = r.split_v;
  const long sp = r.split_vprime;

  r.anchor = {zv, zw};
  const Point top{zv, zw + 2 * eps};
  const Point right{zv + 2 * eps, zw};
  // clipping lines meet the level set g_e = delta on x = zv + delta / y = zw + delta
  const Point top_level{zv + del, zw + 2 * eps - s * del};
  const Point right_level{zv + 2 * eps - sp * del, zw + del};
  // level pieces end where the band |(y - zw) - (x - zv)| < gamma begins
  const Point band_upper{zv + del, zw + del + gam};
  const Point band_lower{zv + del + gam, zw + del};

  r.clip_v = {top, {1, -s}};
  r.clip_vprime = {right, {-sp, 1}};

  r.boundary.push_back(segment(PieceKind::Axis, top, r.anchor));
  r.boundary.push_back(segment(PieceKind::Axis, r.anchor, right));
  r.boundary.push_back(segment(PieceKind::Clipping, right, right_level));
  r.boundary.push_back(segment(PieceKind::Level, right_level, band_lower));
  r.boundary.push_back(SmoothingArc{band_lower, Point{zv + del, zw + del}, band_upper});
  r.boundary.push_back(segment(PieceKind::Level, band_upper, top_level));
  r.boundary.push_back(segment(PieceKind::Clipping, top_level, top));

  r.sub_v.corners = {Point{zv, zw + eps}, top, Point{zv + del, zw + eps - s * del}, top_level};
  r.sub_vprime.corners = {Point{zv + eps, zw}, right, Point{zv + eps - sp * del, zw + del}, right_level};
  return r;
}

TransitionPair transition_matrices(const EdgeSplit& split, std::size_t edge) {
  const long s = split[{edge, Side::V}];
  const long sp = split[{edge, Side::VPrime}];
  return {LatticeTransform{{-s, -1, 1, 0}}, LatticeTransform{{-1, -sp, 0, 1}}};
}

Rectangle normalize_collar(const LatticeTransform& a, const Parallelogram& piece, const Rational& offset,
                           const Rational& weight, const ModelConstants& consts) {
  if (a.det() != 1 && a.det() != -1) throw Error("lattice transform is not in GL(2,Z)");
  const Rectangle rect{offset - 2 * consts.epsilon, offset - consts.epsilon, weight, weight + consts.delta};
  const std::array<Point, 4> expected{Point{rect.x_hi, rect.y_lo}, Point{rect.x_lo, rect.y_lo},
                                      Point{rect.x_hi, rect.y_hi}, Point{rect.x_lo, rect.y_hi}};
  for (std::size_t k = 0; k < 4; ++k) {
    const Point image = a.apply(piece.corners[k]);
    if (image != expected[k]) {
      throw InvariantError("collar corner " + std::to_string(k) + " maps to (" + format_rational(image.x) + ", " +
                           format_rational(image.y) + "), expected (" + format_rational(expected[k].x) + ", " +
                           format_rational(expected[k].y) + ")");
    }
  }
  return rect;
}

bool delzant_corner_check(IntVec d1, IntVec d2) {
  if (gcd_abs(d1.x, d1.y) != 1 || gcd_abs(d2.x, d2.y) != 1) {
    throw Error("Delzant check needs primitive integer vectors");
  }
  return d1.x * d2.y - d2.x * d1.y == 1;
}

NeighborhoodModel build_model(const PlumbingGraph& g) {
  const auto report = validate(g);
  if (!report.ok()) throw Error("malformed graph: " + report.violations.front().message);
  if (g.size() == 0) throw Error("empty graph: nothing to build");
  require_no_isolated(g);

  NeighborhoodModel m;
  m.graph = g;
  m.z = weight_vector(g);
  m.split = split_self_intersections(g);
  m.offsets = edge_offsets(g, m.z, m.split);
  m.constants = choose_constants(g, m.offsets, m.split);
  m.warnings = collar_warnings(g, m.offsets, m.constants);
  m.regions.reserve(g.edges().size());
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    m.regions.push_back(build_edge_region(g, k, m.z, m.split, m.constants));
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    SurfacePiece piece;
    piece.vertex = i;
    piece.genus = g.vertex(i).genus;
    for (const auto& inc : incidences_at(g, i)) {
      piece.collar_intervals.push_back(
          {inc, m.offsets[inc] - 2 * m.constants.epsilon, m.offsets[inc] - m.constants.epsilon});
    }
    piece.collars = static_cast<long>(piece.collar_intervals.size());
    m.surfaces.push_back(std::move(piece));
  }
  return m;
}

namespace {

const char* corner_name(std::size_t piece_index) {
  // corner at the start of boundary piece `piece_index`
  switch (piece_index) {
    case 0: return "top";
    case 1: return "anchor";
    case 2: return "right";
    case 3: return "right-level";
    case 6: return "top-level";
    default: return "band";
  }
}

}  // namespace

ModelReport verify_model(const NeighborhoodModel& model) {
  ModelReport rep;
  const auto& g = model.graph;
  const auto& c = model.constants;
  auto fail = [&](std::string check, std::string detail, Rational discrepancy = 0) {
    rep.failures.push_back({std::move(check), std::move(detail), std::move(discrepancy)});
  };

  // -Q z = area_hat
  RationalVector area;
  for (const auto& v : g.vertices()) area.push_back(v.area_hat);
  const RationalVector lhs = -intersection_matrix(g) * model.z;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (lhs[i] != area[i]) fail("weight-vector", "(-Qz) at '" + g.vertex(i).id + "'", lhs[i] - area[i]);
    if (sgn(model.z[i]) <= 0) fail("weight-positivity", "z at '" + g.vertex(i).id + "'", model.z[i]);
  }

  if (!(sgn(c.gamma) > 0 && c.gamma < c.epsilon)) fail("constants", "need 0 < gamma < eps", c.gamma - c.epsilon);
  if (sgn(c.delta) <= 0) fail("constants", "need delta > 0", c.delta);

  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto incs = incidences_at(g, i);
    const long d = static_cast<long>(incs.size());
    AreaItemization a;
    a.vertex = i;
    long split_sum = 0;
    for (const auto& inc : incs) {
      const auto& edge = g.edges()[inc.edge];
      const std::size_t w = endpoint(edge, other(inc.side));
      const Rational formula = -model.split[inc] * model.z[i] - model.z[w];
      if (model.offsets[inc] != formula) {
        fail("offset-formula", "x at '" + g.vertex(i).id + "' edge " + std::to_string(inc.edge),
             model.offsets[inc] - formula);
      }
      a.surface += model.offsets[inc] - c.epsilon;
      split_sum += model.split[inc];
      const Rational zone = c.epsilon - (model.split[inc] + 1) * c.delta - c.gamma;
      if (sgn(zone) <= 0) {
        fail("constants", "eps - (s+1) delta > gamma at '" + g.vertex(i).id + "' edge " + std::to_string(inc.edge),
             zone);
      }
    }
    a.disks = 2 * d * c.epsilon;
    a.overlaps = -d * c.epsilon;
    a.total = a.surface + a.disks + a.overlaps;
    a.expected = g.vertex(i).area_hat;
    if (sgn(a.surface) <= 0) fail("surface-area", "sum (x - eps) at '" + g.vertex(i).id + "'", a.surface);
    if (a.total != a.expected) fail("area", "area at '" + g.vertex(i).id + "'", a.total - a.expected);
    rep.areas.push_back(a);

    rep.euler.push_back({i, split_sum, g.vertex(i).self_int});
    if (split_sum != g.vertex(i).self_int) {
      fail("euler", "split sum at '" + g.vertex(i).id + "'", Rational(split_sum - g.vertex(i).self_int));
    }
  }

  for (const auto& region : model.regions) {
    const Point expected_anchor{model.z[region.vertex_v], model.z[region.vertex_vprime]};
    if (region.anchor != expected_anchor) fail("anchor", "edge " + std::to_string(region.edge));

    const std::size_t n = region.boundary.size();
    for (std::size_t k = 0; k < n; ++k) {
      const auto* in = std::get_if<Segment>(&region.boundary[(k + n - 1) % n]);
      const auto* out = std::get_if<Segment>(&region.boundary[k]);
      if (!in || !out) continue;
      CornerCheck cc;
      cc.edge = region.edge;
      cc.corner = corner_name(k);
      cc.at = out->from;
      cc.incoming = in->direction;
      cc.outgoing = out->direction;
      cc.det = in->direction.x * out->direction.y - out->direction.x * in->direction.y;
      cc.anchor_adjacent = (k == 0 || k == 2);
      if (in->to != out->from) fail("boundary", "open boundary at edge " + std::to_string(region.edge));
      if (!delzant_corner_check(cc.incoming, cc.outgoing)) {
        fail("delzant", cc.corner + " corner of edge " + std::to_string(region.edge), Rational(cc.det - 1));
      }
      rep.corners.push_back(std::move(cc));
    }

    const auto [a_v, a_vp] = transition_matrices(model.split, region.edge);
    for (Side side : {Side::V, Side::VPrime}) {
      const Incidence inc{region.edge, side};
      const auto& a = side == Side::V ? a_v : a_vp;
      const auto& piece = side == Side::V ? region.sub_v : region.sub_vprime;
      const std::size_t vert = side == Side::V ? region.vertex_v : region.vertex_vprime;
      CollarCheck cc{inc, a, std::nullopt};
      try {
        cc.image = normalize_collar(a, piece, model.offsets[inc], model.z[vert], c);
      } catch (const InvariantError& err) {
        fail("collar", err.what());
      }
      rep.collars.push_back(std::move(cc));
    }
  }
  return rep;
}

}  // namespace plumb
