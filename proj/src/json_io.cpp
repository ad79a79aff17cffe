#include "plumb/json_io.hpp"

#include "plumb/errors.hpp"

namespace plumb {

void to_json(json& j, const PlumbingGraph& g) {
  json vs = json::array();
  for (const auto& v : g.vertices()) {
    vs.push_back({{"id", v.id}, {"genus", v.genus}, {"self", v.self_int}, {"area", v.area_hat}});
  }
  json es = json::array();
  for (const auto& e : g.edges()) es.push_back({g.vertex(e.a).id, g.vertex(e.b).id});
  j = {{"vertices", std::move(vs)}, {"edges", std::move(es)}};
}

void from_json(const json& j, PlumbingGraph& g) {
  PlumbingGraph out;
  for (const auto& v : j.at("vertices")) {
    out.add_vertex({v.at("id").get<std::string>(), v.at("genus").get<long>(), v.at("self").get<long>(),
                    v.at("area").get<Rational>()});
  }
  for (const auto& e : j.at("edges")) out.add_edge(e.at(0).get<std::string>(), e.at(1).get<std::string>());
  g = std::move(out);
}

void to_json(json& j, const Diagnostic& d) { j = {{"code", d.code}, {"message", d.message}}; }

void from_json(const json& j, Diagnostic& d) {
  d.code = j.at("code").get<std::string>();
  d.message = j.at("message").get<std::string>();
}

void to_json(json& j, const ValidationReport& r) {
  j = {{"ok", r.ok()}, {"violations", r.violations}, {"warnings", r.warnings}};
}

void to_json(json& j, const RationalMatrix& m) {
  j = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.size(); ++k) row.push_back(m(i, k));
    j.push_back(std::move(row));
  }
}

void from_json(const json& j, RationalMatrix& m) {
  RationalMatrix out(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i].size() != j.size()) throw Error("matrix JSON is not square");
    for (std::size_t k = 0; k < j.size(); ++k) out(i, k) = j[i][k].get<Rational>();
  }
  m = std::move(out);
}

void to_json(json& j, const DefinitenessCertificate& c) { j = {{"verdict", c.verdict}, {"minors", c.minors}}; }

void to_json(json& j, const Point& p) { j = json::array({p.x, p.y}); }
void from_json(const json& j, Point& p) { p = {j.at(0).get<Rational>(), j.at(1).get<Rational>()}; }
void to_json(json& j, const IntVec& v) { j = json::array({v.x, v.y}); }
void from_json(const json& j, IntVec& v) { v = {j.at(0).get<long>(), j.at(1).get<long>()}; }
void to_json(json& j, const LatticeTransform& a) { j = a.m; }
void from_json(const json& j, LatticeTransform& a) { a.m = j.get<std::array<long, 4>>(); }

void to_json(json& j, const ModelConstants& c) {
  j = {{"epsilon", c.epsilon}, {"gamma", c.gamma}, {"delta", c.delta}};
}

void from_json(const json& j, ModelConstants& c) {
  c = {j.at("epsilon").get<Rational>(), j.at("gamma").get<Rational>(), j.at("delta").get<Rational>()};
}

namespace {

const char* kind_name(PieceKind k) {
  switch (k) {
    case PieceKind::Axis: return "axis";
    case PieceKind::Clipping: return "clipping";
    case PieceKind::Level: return "level";
  }
  return "axis";
}

PieceKind kind_from(const std::string& s) {
  if (s == "axis") return PieceKind::Axis;
  if (s == "clipping") return PieceKind::Clipping;
  if (s == "level") return PieceKind::Level;
  throw Error("unknown boundary piece kind '" + s + "'");
}

const char* side_name(Side s) { return s == Side::V ? "v" : "v'"; }

Side side_from(const std::string& s) {
  if (s == "v") return Side::V;
  if (s == "v'") return Side::VPrime;
  throw Error("unknown incidence side '" + s + "'");
}

json incidence_json(const Incidence& inc) { return {{"edge", inc.edge}, {"side", side_name(inc.side)}}; }

Incidence incidence_from(const json& j) {
  return {j.at("edge").get<std::size_t>(), side_from(j.at("side").get<std::string>())};
}

template <typename T>
json per_incidence_json(const PerIncidence<T>& values) {
  json out = json::array();
  for (std::size_t k = 0; k < values.edge_count(); ++k) {
    out.push_back(json::array({values[{k, Side::V}], values[{k, Side::VPrime}]}));
  }
  return out;
}

template <typename T>
PerIncidence<T> per_incidence_from(const json& j) {
  PerIncidence<T> out(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) {
    out[{k, Side::V}] = j[k].at(0).get<T>();
    out[{k, Side::VPrime}] = j[k].at(1).get<T>();
  }
  return out;
}

json piece_json(const BoundaryPiece& piece) {
  if (const auto* s = std::get_if<Segment>(&piece)) {
    return {{"type", "segment"}, {"kind", kind_name(s->kind)}, {"from", s->from}, {"to", s->to},
            {"direction", s->direction}};
  }
  const auto& a = std::get<SmoothingArc>(piece);
  return {{"type", "arc"}, {"from", a.from}, {"control", a.control}, {"to", a.to}};
}

BoundaryPiece piece_from(const json& j) {
  if (j.at("type") == "segment") {
    return Segment{kind_from(j.at("kind").get<std::string>()), j.at("from").get<Point>(), j.at("to").get<Point>(),
                   j.at("direction").get<IntVec>()};
  }
  return SmoothingArc{j.at("from").get<Point>(), j.at("control").get<Point>(), j.at("to").get<Point>()};
}

json line_json(const Line& l) { return {{"through", l.through}, {"direction", l.direction}}; }
Line line_from(const json& j) { return {j.at("through").get<Point>(), j.at("direction").get<IntVec>()}; }

}  // namespace

void to_json(json& j, const ToricRegion& r) {
  json boundary = json::array();
  for (const auto& p : r.boundary) boundary.push_back(piece_json(p));
  j = {{"edge", r.edge},
       {"vertex_v", r.vertex_v},
       {"vertex_vprime", r.vertex_vprime},
       {"split_v", r.split_v},
       {"split_vprime", r.split_vprime},
       {"anchor", r.anchor},
       {"epsilon", r.epsilon},
       {"gamma", r.gamma},
       {"delta", r.delta},
       {"boundary", std::move(boundary)},
       {"clip_v", line_json(r.clip_v)},
       {"clip_vprime", line_json(r.clip_vprime)},
       {"sub_v", r.sub_v.corners},
       {"sub_vprime", r.sub_vprime.corners}};
}

void from_json(const json& j, ToricRegion& r) {
  r.edge = j.at("edge").get<std::size_t>();
  r.vertex_v = j.at("vertex_v").get<std::size_t>();
  r.vertex_vprime = j.at("vertex_vprime").get<std::size_t>();
  r.split_v = j.at("split_v").get<long>();
  r.split_vprime = j.at("split_vprime").get<long>();
  r.anchor = j.at("anchor").get<Point>();
  r.epsilon = j.at("epsilon").get<Rational>();
  r.gamma = j.at("gamma").get<Rational>();
  r.delta = j.at("delta").get<Rational>();
  r.boundary.clear();
  for (const auto& p : j.at("boundary")) r.boundary.push_back(piece_from(p));
  r.clip_v = line_from(j.at("clip_v"));
  r.clip_vprime = line_from(j.at("clip_vprime"));
  r.sub_v.corners = j.at("sub_v").get<std::array<Point, 4>>();
  r.sub_vprime.corners = j.at("sub_vprime").get<std::array<Point, 4>>();
}

void to_json(json& j, const NeighborhoodModel& m) {
  json surfaces = json::array();
  for (const auto& s : m.surfaces) {
    json collars = json::array();
    for (const auto& c : s.collar_intervals) {
      json cj = incidence_json(c.incidence);
      cj["interval"] = json::array({c.lo, c.hi});
      collars.push_back(std::move(cj));
    }
    surfaces.push_back({{"vertex", s.vertex}, {"genus", s.genus}, {"collars", s.collars},
                        {"collar_intervals", std::move(collars)}});
  }
  j = {{"graph", m.graph},
       {"z", m.z},
       {"split", per_incidence_json(m.split)},
       {"offsets", per_incidence_json(m.offsets)},
       {"constants", m.constants},
       {"regions", m.regions},
       {"surfaces", std::move(surfaces)},
       {"warnings", m.warnings}};
}

void from_json(const json& j, NeighborhoodModel& m) {
  m.graph = j.at("graph").get<PlumbingGraph>();
  m.z = j.at("z").get<RationalVector>();
  m.split = per_incidence_from<long>(j.at("split"));
  m.offsets = per_incidence_from<Rational>(j.at("offsets"));
  m.constants = j.at("constants").get<ModelConstants>();
  m.regions = j.at("regions").get<std::vector<ToricRegion>>();
  m.surfaces.clear();
  for (const auto& s : j.at("surfaces")) {
    SurfacePiece piece;
    piece.vertex = s.at("vertex").get<std::size_t>();
    piece.genus = s.at("genus").get<long>();
    piece.collars = s.at("collars").get<long>();
    for (const auto& c : s.at("collar_intervals")) {
      piece.collar_intervals.push_back(
          {incidence_from(c), c.at("interval").at(0).get<Rational>(), c.at("interval").at(1).get<Rational>()});
    }
    m.surfaces.push_back(std::move(piece));
  }
  m.warnings = j.at("warnings").get<std::vector<Diagnostic>>();
}

void to_json(json& j, const ModelReport& r) {
  json areas = json::array();
  for (const auto& a : r.areas) {
    areas.push_back({{"vertex", a.vertex}, {"surface", a.surface}, {"disks", a.disks}, {"overlaps", a.overlaps},
                     {"total", a.total}, {"expected", a.expected}});
  }
  json euler = json::array();
  for (const auto& e : r.euler) {
    euler.push_back({{"vertex", e.vertex}, {"split_sum", e.split_sum}, {"self", e.self_int}});
  }
  json corners = json::array();
  for (const auto& c : r.corners) {
    corners.push_back({{"edge", c.edge}, {"corner", c.corner}, {"at", c.at}, {"incoming", c.incoming},
                       {"outgoing", c.outgoing}, {"det", c.det}, {"anchor_adjacent", c.anchor_adjacent}});
  }
  json collars = json::array();
  for (const auto& c : r.collars) {
    json cj = incidence_json(c.incidence);
    cj["transform"] = c.transform;
    if (c.image) {
      cj["rectangle"] = {{"x", json::array({c.image->x_lo, c.image->x_hi})},
                         {"y", json::array({c.image->y_lo, c.image->y_hi})}};
    } else {
      cj["rectangle"] = nullptr;
    }
    collars.push_back(std::move(cj));
  }
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"check", f.check}, {"detail", f.detail}, {"discrepancy", f.discrepancy}});
  }
  j = {{"ok", r.ok()},  {"areas", std::move(areas)},     {"euler", std::move(euler)},
       {"corners", std::move(corners)}, {"collars", std::move(collars)}, {"failures", std::move(failures)}};
}

void to_json(json& j, const TorusMap& t) { j = json::array({t.first, t.second}); }
void from_json(const json& j, TorusMap& t) { t = {j.at(0).get<long>(), j.at(1).get<long>()}; }

void to_json(json& j, const HorizontalOBD& obd) {
  json blocks = json::array();
  for (const auto& b : obd.blocks) {
    json bj = incidence_json(b.incidence);
    bj["vertex"] = b.vertex;
    bj["transform"] = b.transform;
    bj["pulled_back"] = b.edge_map_pulled_back;
    bj["block"] = {{"m", b.block.m}, {"inner", b.block.inner}, {"outer", b.block.outer},
                   {"positions", b.block.positions}};
    blocks.push_back(std::move(bj));
  }
  j = {{"vertex_page", obd.vertex_page},
       {"edge_map", obd.edge_map},
       {"total_bindings", obd.total_bindings},
       {"bindings", {{"per_vertex", obd.bindings.per_vertex},
                     {"per_incidence", per_incidence_json(obd.bindings.per_incidence)}}},
       {"blocks", std::move(blocks)}};
}

void from_json(const json& j, HorizontalOBD& obd) {
  obd.vertex_page = j.at("vertex_page").get<TorusMap>();
  obd.edge_map = j.at("edge_map").get<TorusMap>();
  obd.total_bindings = j.at("total_bindings").get<long>();
  obd.bindings.per_vertex = j.at("bindings").at("per_vertex").get<std::vector<long>>();
  obd.bindings.per_incidence = per_incidence_from<long>(j.at("bindings").at("per_incidence"));
  obd.blocks.clear();
  for (const auto& bj : j.at("blocks")) {
    IncidenceBlock b;
    b.incidence = incidence_from(bj);
    b.vertex = bj.at("vertex").get<std::size_t>();
    b.transform = bj.at("transform").get<LatticeTransform>();
    b.edge_map_pulled_back = bj.at("pulled_back").get<TorusMap>();
    const auto& blk = bj.at("block");
    b.block.m = blk.at("m").get<long>();
    b.block.inner = blk.at("inner").get<TorusMap>();
    b.block.outer = blk.at("outer").get<TorusMap>();
    b.block.positions = blk.at("positions").get<std::vector<Rational>>();
    obd.blocks.push_back(std::move(b));
  }
}

void to_json(json& j, const VertexWitness& w) {
  j = {{"id", w.id},
       {"genus", w.genus},
       {"self", w.self_int},
       {"valency", w.valency},
       {"binding_margin", w.binding_margin},
       {"strict_margin", w.strict_margin}};
}

void to_json(json& j, const TheoremCase& tc) {
  j = {{"tag", to_string(tc.tag)},
       {"case1", tc.case1},
       {"case2", tc.case2},
       {"tree", tc.tree},
       {"all_genus_zero", tc.all_genus_zero},
       {"witnesses", tc.witnesses}};
}

void to_json(json& j, const TopologyReport& t) {
  j = {{"n", t.n},
       {"euler_char", t.euler_char},
       {"signature", t.signature},
       {"det_q", t.det_q.get_str()},
       {"h1_order", t.h1_order ? json(t.h1_order->get_str()) : json(nullptr)},
       {"note", "euler_char and signature are standard plumbing invariants, not part of the construction"}};
}

json classification_report(const PlumbingGraph& g) {
  const auto tc = classify_theorem(g);
  const auto hyp = obd_hypothesis(g);
  const auto topo = topology_report(g);
  const auto validation = validate(g);
  json warnings = validation.warnings;
  return {{"graph", g},
          {"negative_definite", tc.definiteness},
          {"theorem_case", tc},
          {"obd_hypothesis", {{"holds", hyp.holds}, {"witnesses", hyp.witnesses}}},
          {"topology", topo},
          {"warnings", std::move(warnings)}};
}

std::string dump(const json& j, bool pretty) { return j.dump(pretty ? 2 : -1) + "\n"; }

}  // namespace plumb
