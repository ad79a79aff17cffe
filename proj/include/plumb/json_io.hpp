#pragma once

#include <string>

#include "json.hpp"
#include "plumb/classify.hpp"
#include "plumb/graph.hpp"
#include "plumb/linalg.hpp"
#include "plumb/model.hpp"
#include "plumb/obd.hpp"

// Rationals travel as canonical "p/q" strings.
namespace nlohmann {
template <>
struct adl_serializer<mpq_class> {
  static void to_json(json& j, const mpq_class& q) { j = plumb::format_rational(q); }
  static void from_json(const json& j, mpq_class& q) { q = plumb::parse_rational(j.get<std::string>()); }
};
}  // namespace nlohmann

namespace plumb {

using nlohmann::json;

void to_json(json& j, const PlumbingGraph& g);
void from_json(const json& j, PlumbingGraph& g);
void to_json(json& j, const Diagnostic& d);
void from_json(const json& j, Diagnostic& d);
void to_json(json& j, const ValidationReport& r);
void to_json(json& j, const RationalMatrix& m);
void from_json(const json& j, RationalMatrix& m);
void to_json(json& j, const DefinitenessCertificate& c);

void to_json(json& j, const Point& p);
void from_json(const json& j, Point& p);
void to_json(json& j, const IntVec& v);
void from_json(const json& j, IntVec& v);
void to_json(json& j, const LatticeTransform& a);
void from_json(const json& j, LatticeTransform& a);
void to_json(json& j, const ModelConstants& c);
void from_json(const json& j, ModelConstants& c);
void to_json(json& j, const ToricRegion& r);
void from_json(const json& j, ToricRegion& r);
void to_json(json& j, const NeighborhoodModel& m);
void from_json(const json& j, NeighborhoodModel& m);
void to_json(json& j, const ModelReport& r);

void to_json(json& j, const TorusMap& t);
void from_json(const json& j, TorusMap& t);
void to_json(json& j, const HorizontalOBD& obd);
void from_json(const json& j, HorizontalOBD& obd);

void to_json(json& j, const VertexWitness& w);
void to_json(json& j, const TheoremCase& tc);
void to_json(json& j, const TopologyReport& t);

/// {graph, negative_definite, theorem_case, obd_hypothesis, topology, warnings}
json classification_report(const PlumbingGraph& g);

/// 2-space indentation when pretty, compact otherwise; always newline-terminated.
std::string dump(const json& j, bool pretty);

}  // namespace plumb
