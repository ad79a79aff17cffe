#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "plumb/graph.hpp"

namespace plumb {

/// Linear chain v1 - v2 - ... - vk, genus 0, area 1.
PlumbingGraph chain(const std::vector<long>& self_ints);

/// chain(-(p+2), -2, ..., -2) with p - 1 vertices; p >= 2.
PlumbingGraph rational_blowdown(long p);

/// Center vertex "c" with the given self-intersection and genus; each leg is a
/// chain of genus-0 vertices "l<i>_<j>" attached to the center by its first vertex.
PlumbingGraph star(long center_self, long center_genus, const std::vector<std::vector<long>>& legs);

/// The random_negdef_graph_matrix recipe (max multiplicity 2) read as a graph:
/// off-diagonal entries become edge multiplicities, the diagonal self-intersections.
PlumbingGraph random_graph(std::size_t n, std::uint64_t seed);

/// Family spec such as "chain(-2,-2)", "rational_blowdown(3)",
/// "star(-4,0;-2;-2,-2)" (center self,genus; then one group per leg) or
/// "random(5)" (uses `seed`). Throws plumb::Error on bad parameters.
PlumbingGraph corpus(std::string_view family_spec, std::uint64_t seed = 0);

struct NamedGraph {
  std::string name;
  PlumbingGraph graph;
};

/// chains of -2 (k = 2..8), rational_blowdown(3..10), a few stars, and the first
/// `random_count` random graphs (n in 2..6) without isolated vertices.
std::vector<NamedGraph> standard_corpus(std::size_t random_count, std::uint64_t seed);

}  // namespace plumb
