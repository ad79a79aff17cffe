#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plumb/matrix.hpp"
#include "plumb/rational.hpp"

namespace plumb {

/// A decorated vertex: genus g_v, self-intersection s_v and area in units of
/// 2*pi (so a_v = 2*pi*area_hat and every identity downstream stays rational).
struct Vertex {
  std::string id;
  long genus = 0;
  long self_int = 0;
  Rational area_hat = 1;

  bool operator==(const Vertex&) const = default;
};

/// Unordered edge between two vertex indices, kept in input orientation.
struct Edge {
  std::size_t a = 0;
  std::size_t b = 0;

  std::size_t lo() const { return a < b ? a : b; }
  std::size_t hi() const { return a < b ? b : a; }
  bool operator==(const Edge&) const = default;
};

/// Decorated plumbing multigraph. Vertices and edges keep input order; that order
/// is canonical for every derived structure (incidences, regions, blocks).
class PlumbingGraph {
 public:
  PlumbingGraph() = default;

  /// Unchecked assembly from parts; use validate() to audit the result.
  PlumbingGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

  /// Checked builders. Throw plumb::Error on duplicate id, genus < 0, area <= 0,
  /// unknown endpoint or self-loop.
  void add_vertex(Vertex v);
  void add_edge(std::string_view a, std::string_view b);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return vertices_.size(); }
  const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }

  std::optional<std::size_t> find(std::string_view id) const;
  std::size_t index_of(std::string_view id) const;  // throws on unknown id

  /// Edge endpoints at vertex i, counted with multiplicity.
  long valency(std::size_t i) const;

  /// Edge indices incident to vertex i, ascending.
  std::vector<std::size_t> incident_edges(std::size_t i) const;

  /// Copy of this graph with the areas replaced (same combinatorics).
  PlumbingGraph with_areas(const std::vector<Rational>& areas) const;

  bool operator==(const PlumbingGraph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

struct Diagnostic {
  std::string code;
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

struct ValidationReport {
  std::vector<Diagnostic> violations;
  std::vector<Diagnostic> warnings;

  bool ok() const { return violations.empty(); }
};

/// Line-oriented text format:
///   vertex <id> genus=<int> self=<int> [area=<p|p/q>]
///   edge <id> <id>
/// Blank lines and '#' comments are ignored. Throws ParseError.
PlumbingGraph parse_graph(std::string_view text);

std::string render_graph(const PlumbingGraph& g);

/// Vertex-count-sized symmetric integer matrix: Q_ii = s_i, Q_ij = #edges(i,j).
RationalMatrix intersection_matrix(const PlumbingGraph& g);

long valency(const PlumbingGraph& g, std::string_view id);

/// Connected with #edges == #vertices - 1 (a double edge is a cycle).
bool is_tree(const PlumbingGraph& g);

ValidationReport validate(const PlumbingGraph& g);

}  // namespace plumb
