#pragma once

#include <cstddef>
#include <vector>

#include "plumb/graph.hpp"
#include "plumb/model.hpp"

namespace plumb {

/// Homotopy class of a circle-valued map c_first * (first angle) + c_second *
/// (second angle) on a 2-torus. Which angles are meant depends on the chart:
/// (q1, q2) on an edge torus, (alpha, theta) on a collar, (alpha, beta) on a block.
struct TorusMap {
  long first = 0;
  long second = 0;

  bool operator==(const TorusMap&) const = default;
};

/// Interpolating piece [0,1] x T^2 with m binding circles at angles i/m (in
/// turns). Inner boundary map beta, outer boundary map beta + m alpha.
struct OBDBlock {
  long m = 0;
  TorusMap inner;
  TorusMap outer;
  std::vector<Rational> positions;

  bool operator==(const OBDBlock&) const = default;
};

struct BindingData {
  std::vector<long> per_vertex;        // p_v = -s_v - d_v
  PerIncidence<long> per_incidence;    // p_{v,e} = -s_{v,e} - 1

  bool operator==(const BindingData&) const = default;
};

struct IncidenceBlock {
  Incidence incidence;
  std::size_t vertex = 0;
  LatticeTransform transform;
  TorusMap edge_map_pulled_back;  // q1 + q2 in (alpha, theta)
  OBDBlock block;

  bool operator==(const IncidenceBlock&) const = default;
};

struct HorizontalOBD {
  TorusMap vertex_page{0, 1};  // theta in (alpha, theta)
  TorusMap edge_map{1, 1};     // q1 + q2 in (q1, q2)
  std::vector<IncidenceBlock> blocks;  // edge order, V side before V' side
  BindingData bindings;
  long total_bindings = 0;

  bool operator==(const HorizontalOBD&) const = default;
};

/// Requires -s_v - d_v >= 0 at every vertex and s_{v,e} <= -1 at every incidence;
/// throws plumb::Error naming the offending vertex or incidence.
BindingData binding_counts(const PlumbingGraph& g, const EdgeSplit& split);

OBDBlock building_block(long m);

/// Pullback of an edge-chart map along the torus coordinate change of `a`:
/// (q1', q2') = A^{-T} (q1, q2) gives c . q = (A c) . q'.
TorusMap pull_back(const LatticeTransform& a, const TorusMap& edge_map);

/// Interpolates the edge map q1 + q2 to the vertex page map theta at every
/// incidence with p_{v,e} bindings. Consumes only combinatorics: no areas.
HorizontalOBD assemble_obd(const PlumbingGraph& g, const EdgeSplit& split);

struct OBDSummary {
  long total_bindings = 0;
  std::vector<long> per_vertex;
  bool area_independent = true;  // the assembly signature admits no area data
};

OBDSummary obd_summary(const HorizontalOBD& obd);

}  // namespace plumb
