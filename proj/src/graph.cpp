#include "plumb/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "plumb/errors.hpp"

namespace plumb {

PlumbingGraph::PlumbingGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {}

void PlumbingGraph::add_vertex(Vertex v) {
  if (v.id.empty()) throw Error("empty vertex id");
  if (find(v.id)) throw Error("duplicate vertex id '" + v.id + "'");
  if (v.genus < 0) throw Error("negative genus at vertex '" + v.id + "'");
  if (sgn(v.area_hat) <= 0) throw Error("non-positive area at vertex '" + v.id + "'");
  vertices_.push_back(std::move(v));
}

void PlumbingGraph::add_edge(std::string_view a, std::string_view b) {
  const auto ia = find(a);
  const auto ib = find(b);
  if (!ia) throw Error("unknown endpoint '" + std::string(a) + "'");
  if (!ib) throw Error("unknown endpoint '" + std::string(b) + "'");
  if (*ia == *ib) throw Error("self-loop at vertex '" + std::string(a) + "'");
  edges_.push_back({*ia, *ib});
}

std::optional<std::size_t> PlumbingGraph::find(std::string_view id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].id == id) return i;
  }
  return std::nullopt;
}

std::size_t PlumbingGraph::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw Error("unknown vertex id '" + std::string(id) + "'");
}

long PlumbingGraph::valency(std::size_t i) const {
  long d = 0;
  for (const auto& e : edges_) {
    d += (e.a == i) + (e.b == i);
  }
  return d;
}

std::vector<std::size_t> PlumbingGraph::incident_edges(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    if (edges_[k].a == i || edges_[k].b == i) out.push_back(k);
  }
  return out;
}

PlumbingGraph PlumbingGraph::with_areas(const std::vector<Rational>& areas) const {
  if (areas.size() != vertices_.size()) throw Error("area vector has wrong length");
  auto vs = vertices_;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (sgn(areas[i]) <= 0) throw Error("non-positive area at vertex '" + vs[i].id + "'");
    vs[i].area_hat = areas[i];
  }
  return PlumbingGraph(std::move(vs), edges_);
}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size() || line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

long parse_long(std::string_view s, std::size_t line, std::size_t col, std::string_view what) {
  long value = 0;
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || first == s.data() + s.size()) {
    throw ParseError(line, col, "expected integer for " + std::string(what) + ", got '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

PlumbingGraph parse_graph(std::string_view text) {
  PlumbingGraph g;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;

    const auto tokens = tokenize(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const auto& head = tokens.front();
    if (head.text == "vertex") {
      if (tokens.size() < 2) throw ParseError(line_no, head.column, "vertex line needs an id");
      Vertex v;
      v.id = std::string(tokens[1].text);
      if (v.id.find('=') != std::string::npos) {
        throw ParseError(line_no, tokens[1].column, "vertex id may not contain '='");
      }
      bool seen_genus = false, seen_self = false, seen_area = false;
      for (std::size_t k = 2; k < tokens.size(); ++k) {
        const auto& tok = tokens[k];
        const auto eq = tok.text.find('=');
        if (eq == std::string_view::npos) {
          throw ParseError(line_no, tok.column, "expected key=value, got '" + std::string(tok.text) + "'");
        }
        const auto key = tok.text.substr(0, eq);
        const auto value = tok.text.substr(eq + 1);
        const std::size_t vcol = tok.column + eq + 1;
        auto once = [&](bool& seen) {
          if (seen) throw ParseError(line_no, tok.column, "duplicate field '" + std::string(key) + "'");
          seen = true;
        };
        if (key == "genus") {
          once(seen_genus);
          v.genus = parse_long(value, line_no, vcol, "genus");
          if (v.genus < 0) throw ParseError(line_no, vcol, "negative genus");
        } else if (key == "self") {
          once(seen_self);
          v.self_int = parse_long(value, line_no, vcol, "self");
        } else if (key == "area") {
          once(seen_area);
          try {
            v.area_hat = parse_rational(value);
          } catch (const Error& e) {
            throw ParseError(line_no, vcol, e.what());
          }
          if (sgn(v.area_hat) <= 0) throw ParseError(line_no, vcol, "non-positive area");
        } else {
          throw ParseError(line_no, tok.column, "unknown field '" + std::string(key) + "'");
        }
      }
      if (!seen_genus) throw ParseError(line_no, head.column, "missing genus=");
      if (!seen_self) throw ParseError(line_no, head.column, "missing self=");
      if (g.find(v.id)) throw ParseError(line_no, tokens[1].column, "duplicate vertex id '" + v.id + "'");
      g.add_vertex(std::move(v));
    } else if (head.text == "edge") {
      if (tokens.size() != 3) throw ParseError(line_no, head.column, "edge line needs exactly two ids");
      for (std::size_t k = 1; k < 3; ++k) {
        if (!g.find(tokens[k].text)) {
          throw ParseError(line_no, tokens[k].column, "unknown endpoint '" + std::string(tokens[k].text) + "'");
        }
      }
      if (tokens[1].text == tokens[2].text) {
        throw ParseError(line_no, tokens[2].column, "self-loop at vertex '" + std::string(tokens[1].text) + "'");
      }
      g.add_edge(tokens[1].text, tokens[2].text);
    } else {
      throw ParseError(line_no, head.column, "unknown directive '" + std::string(head.text) + "'");
    }
    if (end == text.size()) break;
  }
  return g;
}

std::string render_graph(const PlumbingGraph& g) {
  std::ostringstream out;
  for (const auto& v : g.vertices()) {
    out << "vertex " << v.id << " genus=" << v.genus << " self=" << v.self_int
        << " area=" << format_rational(v.area_hat) << '\n';
  }
  for (const auto& e : g.edges()) {
    out << "edge " << g.vertex(e.a).id << ' ' << g.vertex(e.b).id << '\n';
  }
  return out.str();
}

RationalMatrix intersection_matrix(const PlumbingGraph& g) {
  RationalMatrix q(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) q(i, i) = g.vertex(i).self_int;
  for (const auto& e : g.edges()) {
    q(e.a, e.b) += 1;
    q(e.b, e.a) += 1;
  }
  return q;
}

long valency(const PlumbingGraph& g, std::string_view id) { return g.valency(g.index_of(id)); }

bool is_tree(const PlumbingGraph& g) {
  const std::size_t n = g.size();
  if (n == 0 || g.edges().size() != n - 1) return false;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const auto& e : g.edges()) {
    const auto ra = root(e.a), rb = root(e.b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components == 1;
}

ValidationReport validate(const PlumbingGraph& g) {
  ValidationReport report;
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const auto& v = vs[i];
    if (v.id.empty()) report.violations.push_back({"empty-id", "vertex " + std::to_string(i) + " has an empty id"});
    for (std::size_t j = 0; j < i; ++j) {
      if (vs[j].id == v.id) {
        report.violations.push_back({"duplicate-id", "duplicate vertex id '" + v.id + "'"});
        break;
      }
    }
    if (v.genus < 0) report.violations.push_back({"negative-genus", "negative genus at vertex '" + v.id + "'"});
    if (sgn(v.area_hat) <= 0) {
      report.violations.push_back({"non-positive-area", "non-positive area at vertex '" + v.id + "'"});
    }
  }
  bool endpoints_ok = true;
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto& e = g.edges()[k];
    if (e.a >= vs.size() || e.b >= vs.size()) {
      report.violations.push_back({"unknown-endpoint", "edge " + std::to_string(k) + " names a missing vertex"});
      endpoints_ok = false;
    } else if (e.a == e.b) {
      report.violations.push_back({"self-loop", "edge " + std::to_string(k) + " is a self-loop at '" + vs[e.a].id + "'"});
    }
  }
  if (endpoints_ok) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (g.valency(i) == 0) {
        report.warnings.push_back(
            {"isolated-vertex", "isolated vertex '" + vs[i].id + "': model construction unavailable"});
      }
    }
  }
  return report;
}

}  // namespace plumb
