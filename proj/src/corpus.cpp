#include "plumb/corpus.hpp"

#include <charconv>

#include "plumb/errors.hpp"
#include "plumb/linalg.hpp"
#include "plumb/random.hpp"

namespace plumb {

PlumbingGraph chain(const std::vector<long>& self_ints) {
  if (self_ints.empty()) throw Error("chain needs at least one vertex");
  PlumbingGraph g;
  for (std::size_t i = 0; i < self_ints.size(); ++i) {
    g.add_vertex({"v" + std::to_string(i + 1), 0, self_ints[i], 1});
  }
  for (std::size_t i = 0; i + 1 < self_ints.size(); ++i) {
    g.add_edge("v" + std::to_string(i + 1), "v" + std::to_string(i + 2));
  }
  return g;
}

PlumbingGraph rational_blowdown(long p) {
  if (p < 2) throw Error("rational_blowdown needs p >= 2");
  std::vector<long> s(static_cast<std::size_t>(p - 1), -2);
  s.front() = -(p + 2);
  return chain(s);
}

PlumbingGraph star(long center_self, long center_genus, const std::vector<std::vector<long>>& legs) {
  PlumbingGraph g;
  g.add_vertex({"c", center_genus, center_self, 1});
  for (std::size_t i = 0; i < legs.size(); ++i) {
    if (legs[i].empty()) throw Error("star legs must be non-empty");
    std::string prev = "c";
    for (std::size_t j = 0; j < legs[i].size(); ++j) {
      std::string id = "l" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
      g.add_vertex({id, 0, legs[i][j], 1});
      g.add_edge(prev, id);
      prev = std::move(id);
    }
  }
  return g;
}

PlumbingGraph random_graph(std::size_t n, std::uint64_t seed) {
  const auto q = random_negdef_graph_matrix(n, 2, seed);
  PlumbingGraph g;
  for (std::size_t i = 0; i < n; ++i) {
    g.add_vertex({"v" + std::to_string(i + 1), 0, q(i, i).get_num().get_si(), 1});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const long mult = q(i, j).get_num().get_si();
      for (long k = 0; k < mult; ++k) g.add_edge(g.vertex(i).id, g.vertex(j).id);
    }
  }
  return g;
}

namespace {

std::vector<long> parse_list(std::string_view text, char sep) {
  std::vector<long> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(sep, pos), text.size());
    std::string_view item = text.substr(pos, end - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    long v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw Error("bad integer '" + std::string(item) + "' in corpus parameters");
    }
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

}  // namespace

PlumbingGraph corpus(std::string_view spec, std::uint64_t seed) {
  const auto open = spec.find('(');
  if (open == std::string_view::npos || spec.back() != ')') {
    throw Error("corpus family must look like name(params), got '" + std::string(spec) + "'");
  }
  const auto name = spec.substr(0, open);
  const auto args = spec.substr(open + 1, spec.size() - open - 2);
  if (name == "chain") {
    return chain(parse_list(args, ','));
  }
  if (name == "rational_blowdown") {
    const auto p = parse_list(args, ',');
    if (p.size() != 1) throw Error("rational_blowdown takes one parameter");
    return rational_blowdown(p[0]);
  }
  if (name == "random") {
    const auto p = parse_list(args, ',');
    if (p.size() != 1 || p[0] < 1) throw Error("random takes one parameter n >= 1");
    return random_graph(static_cast<std::size_t>(p[0]), seed);
  }
  if (name == "star") {
    std::vector<std::vector<long>> groups;
    std::size_t pos = 0;
    while (pos <= args.size()) {
      const std::size_t end = std::min(args.find(';', pos), args.size());
      groups.push_back(parse_list(args.substr(pos, end - pos), ','));
      pos = end + 1;
    }
    if (groups.front().size() != 2) throw Error("star needs 'center_self,center_genus' first");
    const long center_self = groups.front()[0];
    const long center_genus = groups.front()[1];
    groups.erase(groups.begin());
    return star(center_self, center_genus, groups);
  }
  throw Error("unknown corpus family '" + std::string(name) + "'");
}

std::vector<NamedGraph> standard_corpus(std::size_t random_count, std::uint64_t seed) {
  std::vector<NamedGraph> out;
  for (long k = 2; k <= 8; ++k) {
    out.push_back({"chain(-2x" + std::to_string(k) + ")", chain(std::vector<long>(static_cast<std::size_t>(k), -2))});
  }
  for (long p = 3; p <= 10; ++p) {
    out.push_back({"rational_blowdown(" + std::to_string(p) + ")", rational_blowdown(p)});
  }
  for (const char* spec : {"star(-4,0;-2;-2;-2)", "star(-3,0;-2;-2;-2)", "star(-5,1;-2,-2;-3)",
                           "star(-6,0;-2,-2;-3;-2;-4)", "star(-7,2;-3;-3)"}) {
    out.push_back({spec, corpus(spec)});
  }
  SplitMix64 seeds(seed);
  for (std::size_t found = 0, k = 0; found < random_count; ++k) {
    const std::size_t n = 2 + k % 5;
    const std::uint64_t s = seeds.next();
    auto g = random_graph(n, s);
    bool isolated = false;
    for (std::size_t i = 0; i < g.size(); ++i) isolated = isolated || g.valency(i) == 0;
    if (isolated) continue;
    out.push_back({"random(" + std::to_string(n) + ")@" + std::to_string(s), std::move(g)});
    ++found;
  }
  return out;
}

}  // namespace plumb
