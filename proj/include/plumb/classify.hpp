#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plumb/graph.hpp"
#include "plumb/linalg.hpp"

namespace plumb {

enum class CaseTag { Case1, Case2, Both, ConjectureOnly, Inapplicable };

std::string to_string(CaseTag tag);

/// Inequalities evaluated at one vertex.
struct VertexWitness {
  std::string id;
  long genus = 0;
  long self_int = 0;
  long valency = 0;
  long binding_margin = 0;  // -s - d; Case 1 and the open-book hypothesis need >= 0
  long strict_margin = 0;   // -s - d - 2g; Case 2 needs > 0

  bool operator==(const VertexWitness&) const = default;
};

struct TheoremCase {
  CaseTag tag = CaseTag::Inapplicable;
  DefinitenessCertificate definiteness;
  bool tree = false;
  bool all_genus_zero = false;
  bool case1 = false;
  bool case2 = false;
  std::vector<VertexWitness> witnesses;
};

std::vector<VertexWitness> vertex_witnesses(const PlumbingGraph& g);

TheoremCase classify_theorem(const PlumbingGraph& g);

struct HypothesisResult {
  bool holds = false;
  std::vector<VertexWitness> witnesses;
};

/// -s_v - d_v >= 0 at every vertex.
HypothesisResult obd_hypothesis(const PlumbingGraph& g);

/// Standard plumbing invariants. euler_char = sum (2 - 2g) - #edges; signature
/// from the inertia of Q (equals -n exactly when Q is negative definite);
/// h1_order = |det Q| only for a tree of spheres.
struct TopologyReport {
  long n = 0;
  long euler_char = 0;
  long signature = 0;
  Integer det_q;
  std::optional<Integer> h1_order;
};

TopologyReport topology_report(const PlumbingGraph& g);

}  // namespace plumb
