#include "plumb/classify.hpp"

namespace plumb {

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Case1: return "Case1";
    case CaseTag::Case2: return "Case2";
    case CaseTag::Both: return "Both";
    case CaseTag::ConjectureOnly: return "ConjectureOnly";
    case CaseTag::Inapplicable: return "Inapplicable";
  }
  return "Inapplicable";
}

std::vector<VertexWitness> vertex_witnesses(const PlumbingGraph& g) {
  std::vector<VertexWitness> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& v = g.vertex(i);
    VertexWitness w;
    w.id = v.id;
    w.genus = v.genus;
    w.self_int = v.self_int;
    w.valency = g.valency(i);
    w.binding_margin = -v.self_int - w.valency;
    w.strict_margin = w.binding_margin - 2 * v.genus;
    out.push_back(std::move(w));
  }
  return out;
}

TheoremCase classify_theorem(const PlumbingGraph& g) {
  TheoremCase tc;
  tc.definiteness = is_negative_definite(intersection_matrix(g));
  tc.tree = is_tree(g);
  tc.witnesses = vertex_witnesses(g);
  tc.all_genus_zero = true;
  bool binding_ok = true;
  bool strict_ok = true;
  for (const auto& w : tc.witnesses) {
    tc.all_genus_zero = tc.all_genus_zero && w.genus == 0;
    binding_ok = binding_ok && w.binding_margin >= 0;
    strict_ok = strict_ok && w.strict_margin > 0;
  }
  const bool nd = tc.definiteness.verdict;
  tc.case1 = nd && tc.tree && tc.all_genus_zero && binding_ok;
  tc.case2 = nd && strict_ok;
  if (!nd) {
    tc.tag = CaseTag::Inapplicable;
  } else if (tc.case1 && tc.case2) {
    tc.tag = CaseTag::Both;
  } else if (tc.case1) {
    tc.tag = CaseTag::Case1;
  } else if (tc.case2) {
    tc.tag = CaseTag::Case2;
  } else {
    tc.tag = CaseTag::ConjectureOnly;
  }
  return tc;
}

HypothesisResult obd_hypothesis(const PlumbingGraph& g) {
  HypothesisResult r;
  r.witnesses = vertex_witnesses(g);
  r.holds = true;
  for (const auto& w : r.witnesses) r.holds = r.holds && w.binding_margin >= 0;
  return r;
}

TopologyReport topology_report(const PlumbingGraph& g) {
  TopologyReport t;
  t.n = static_cast<long>(g.size());
  for (const auto& v : g.vertices()) t.euler_char += 2 - 2 * v.genus;
  t.euler_char -= static_cast<long>(g.edges().size());
  const auto q = intersection_matrix(g);
  const auto in = inertia(q);
  t.signature = static_cast<long>(in.positive) - static_cast<long>(in.negative);
  const auto minors = leading_principal_minors(q);
  t.det_q = minors.empty() ? Integer(1) : Integer(minors.back().get_num());
  bool spheres = true;
  for (const auto& v : g.vertices()) spheres = spheres && v.genus == 0;
  if (spheres && is_tree(g)) t.h1_order = abs(t.det_q);
  return t;
}

}  // namespace plumb
