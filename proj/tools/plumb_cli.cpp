// plumb: command-line front end for the plumbing-graph library.
//
//   plumb check    <graph>            validation report (JSON)
//   plumb build    <graph>            neighborhood model + verification report (JSON)
//   plumb obd      <graph>            horizontal open book data (JSON)
//   plumb classify <graph>            hypothesis classification report (JSON)
//   plumb svg      <graph> [--labels] one SVG per edge chart plus the profile plot
//   plumb corpus   <family(params)>   graph text for a named family
//
// Exit status: 0 success, 1 user error, 2 internal invariant failure.

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "plumb/classify.hpp"
#include "plumb/corpus.hpp"
#include "plumb/errors.hpp"
#include "plumb/json_io.hpp"
#include "plumb/model.hpp"
#include "plumb/obd.hpp"
#include "plumb/svg.hpp"

namespace {

struct Options {
  std::string input;
  std::string inline_graph;
  std::string out;
  std::uint64_t seed = 0;
  bool labels = false;
  bool pretty = false;
};

bool use_color() {
  const char* env = std::getenv("PLUMB_COLOR");
  if (env && std::string(env) == "never") return false;
  return isatty(STDERR_FILENO) != 0;
}

void diagnose(const std::string& level, const std::string& message) {
  if (use_color()) {
    std::cerr << (level == "error" ? "\033[31m" : "\033[33m") << level << ":\033[0m " << message << '\n';
  } else {
    std::cerr << level << ": " << message << '\n';
  }
}

std::string read_input(const Options& opt) {
  if (!opt.inline_graph.empty()) return opt.inline_graph;
  if (opt.input.empty()) throw plumb::Error("no input graph (give a path, '-' for stdin, or --graph)");
  if (opt.input == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(opt.input, std::ios::binary);
  if (!in) throw plumb::Error("cannot read '" + opt.input + "'");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_output(const Options& opt, const std::string& doc) {
  if (opt.out.empty()) {
    std::cout << doc;
    return;
  }
  std::ofstream out(opt.out, std::ios::binary);
  if (!out) throw plumb::Error("cannot write '" + opt.out + "'");
  out << doc;
}

void warn_all(const std::vector<plumb::Diagnostic>& ds) {
  for (const auto& d : ds) diagnose("warning", d.message);
}

int run_check(const Options& opt) {
  const auto g = plumb::parse_graph(read_input(opt));
  const auto report = plumb::validate(g);
  warn_all(report.warnings);
  write_output(opt, plumb::dump(plumb::json(report), opt.pretty));
  return report.ok() ? 0 : 1;
}

int run_build(const Options& opt) {
  const auto g = plumb::parse_graph(read_input(opt));
  const auto model = plumb::build_model(g);
  const auto report = plumb::verify_model(model);
  warn_all(model.warnings);
  write_output(opt, plumb::dump({{"model", model}, {"report", report}}, opt.pretty));
  if (!report.ok()) {
    for (const auto& f : report.failures) diagnose("error", f.check + ": " + f.detail);
    throw plumb::InvariantError("model verification failed");
  }
  return 0;
}

int run_obd(const Options& opt) {
  const auto g = plumb::parse_graph(read_input(opt));
  const auto obd = plumb::assemble_obd(g, plumb::split_self_intersections(g));
  write_output(opt, plumb::dump(plumb::json(obd), opt.pretty));
  return 0;
}

int run_classify(const Options& opt) {
  const auto g = plumb::parse_graph(read_input(opt));
  const auto report = plumb::classification_report(g);
  write_output(opt, plumb::dump(report, opt.pretty));
  return 0;
}

int run_svg(const Options& opt) {
  const auto g = plumb::parse_graph(read_input(opt));
  const auto model = plumb::build_model(g);
  warn_all(model.warnings);
  std::vector<std::pair<std::string, std::string>> docs;
  for (const auto& r : model.regions) {
    docs.emplace_back("region_e" + std::to_string(r.edge) + ".svg", plumb::emit_region_svg(r, opt.labels));
  }
  docs.emplace_back("profile.svg", plumb::emit_profile_svg(model.constants));
  if (opt.out.empty()) {
    for (const auto& [name, body] : docs) std::cout << body;
    return 0;
  }
  std::filesystem::create_directories(opt.out);
  for (const auto& [name, body] : docs) {
    const auto path = std::filesystem::path(opt.out) / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw plumb::Error("cannot write '" + path.string() + "'");
    out << body;
  }
  return 0;
}

int run_corpus(const Options& opt, const std::string& family) {
  const auto g = plumb::corpus(family, opt.seed);
  for (const auto& w : plumb::validate(g).warnings) diagnose("warning", w.message);
  write_output(opt, plumb::render_graph(g));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact plumbing-graph neighborhood models and open books"};
  app.require_subcommand(1, 1);
  Options opt;
  std::string family;

  auto add_common = [&](CLI::App* sub, bool needs_graph) {
    if (needs_graph) {
      sub->add_option("input", opt.input, "graph file ('-' for stdin)");
      sub->add_option("--graph", opt.inline_graph, "inline graph text");
    }
    sub->add_option("--out", opt.out, "output path (a directory for svg)");
    sub->add_option("--seed", opt.seed, "seed for random families");
    sub->add_flag("--pretty", opt.pretty, "indent JSON output");
  };
  auto* check = app.add_subcommand("check", "validate a graph");
  auto* build = app.add_subcommand("build", "build and verify the neighborhood model");
  auto* obd = app.add_subcommand("obd", "assemble the horizontal open book");
  auto* classify = app.add_subcommand("classify", "classify against the theorem hypotheses");
  auto* svg = app.add_subcommand("svg", "render edge charts and the profile plot");
  auto* corp = app.add_subcommand("corpus", "emit a graph from a named family");
  for (auto* sub : {check, build, obd, classify, svg}) add_common(sub, true);
  add_common(corp, false);
  svg->add_flag("--labels", opt.labels, "annotate corners");
  corp->add_option("family", family, "chain(..), rational_blowdown(p), star(s,g;leg;..), random(n)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*check) return run_check(opt);
    if (*build) return run_build(opt);
    if (*obd) return run_obd(opt);
    if (*classify) return run_classify(opt);
    if (*svg) return run_svg(opt);
    if (*corp) return run_corpus(opt, family);
  } catch (const plumb::InvariantError& e) {
    diagnose("error", std::string("internal invariant failure: ") + e.what() +
                          " (this is a bug or a counterexample to a verified identity)");
    return 2;
  } catch (const plumb::Error& e) {
    diagnose("error", e.what());
    return 1;
  } catch (const std::exception& e) {
    diagnose("error", e.what());
    return 1;
  }
  return 1;
}
