#include "plumb/obd.hpp"

#include "plumb/errors.hpp"

namespace plumb {

BindingData binding_counts(const PlumbingGraph& g, const EdgeSplit& split) {
  BindingData b;
  b.per_incidence = PerIncidence<long>(g.edges().size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& v = g.vertex(i);
    const long p = -v.self_int - g.valency(i);
    if (p < 0) {
      throw Error("binding hypothesis fails at '" + v.id + "': -s - d = " + std::to_string(p) + " < 0");
    }
    long sum = 0;
    for (const auto& inc : incidences_at(g, i)) {
      const long pe = -split[inc] - 1;
      if (pe < 0) {
        throw Error("negative binding count at '" + v.id + "' on edge " + std::to_string(inc.edge) +
                    ": s_{v,e} = " + std::to_string(split[inc]));
      }
      b.per_incidence[inc] = pe;
      sum += pe;
    }
    if (sum != p) {
      throw InvariantError("binding counts at '" + v.id + "' sum to " + std::to_string(sum) + ", expected " +
                           std::to_string(p));
    }
    b.per_vertex.push_back(p);
  }
  return b;
}

OBDBlock building_block(long m) {
  if (m < 0) throw Error("building block needs m >= 0");
  OBDBlock block;
  block.m = m;
  block.inner = {0, 1};
  block.outer = {m, 1};
  for (long i = 0; i < m; ++i) block.positions.push_back(make_rational(i, m));
  return block;
}

TorusMap pull_back(const LatticeTransform& a, const TorusMap& edge_map) {
  const IntVec c = a.apply(IntVec{edge_map.first, edge_map.second});
  return {c.x, c.y};
}

HorizontalOBD assemble_obd(const PlumbingGraph& g, const EdgeSplit& split) {
  HorizontalOBD obd;
  obd.bindings = binding_counts(g, split);
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto [a_v, a_vp] = transition_matrices(split, k);
    for (Side side : {Side::V, Side::VPrime}) {
      IncidenceBlock ib;
      ib.incidence = {k, side};
      ib.vertex = endpoint(g.edges()[k], side);
      ib.transform = side == Side::V ? a_v : a_vp;
      ib.edge_map_pulled_back = pull_back(ib.transform, obd.edge_map);
      ib.block = building_block(obd.bindings.per_incidence[ib.incidence]);
      const TorusMap expected{-split[ib.incidence] - 1, 1};
      if (ib.edge_map_pulled_back != expected || ib.block.outer != ib.edge_map_pulled_back ||
          ib.block.inner != obd.vertex_page) {
        throw InvariantError("boundary fibrations do not match at edge " + std::to_string(k) + " vertex '" +
                             g.vertex(ib.vertex).id + "'");
      }
      obd.blocks.push_back(std::move(ib));
    }
  }
  for (long p : obd.bindings.per_vertex) obd.total_bindings += p;
  return obd;
}

OBDSummary obd_summary(const HorizontalOBD& obd) {
  return {obd.total_bindings, obd.bindings.per_vertex, true};
}

}  // namespace plumb
