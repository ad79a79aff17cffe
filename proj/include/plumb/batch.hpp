#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plumb/corpus.hpp"
#include "plumb/linalg.hpp"
#include "plumb/model.hpp"
#include "plumb/obd.hpp"

namespace plumb {

/// Serial is the reference path; Parallel fans instances out over OpenMP threads
/// and writes each result into its own slot, so output order never depends on
/// scheduling.
enum class Execution { Serial, Parallel };

struct WeightInstance {
  RationalMatrix q;
  RationalVector area;
};

/// n uniform in [1, max_n], Q from random_negdef_graph_matrix(n, 2, .),
/// area entries p/q with p in [1, 12], q in [1, 6].
std::vector<WeightInstance> weight_instances(std::size_t count, std::uint64_t seed, std::size_t max_n = 6);

struct WeightOutcome {
  RationalVector z;
  bool positive = false;
  std::string error;

  bool operator==(const WeightOutcome&) const = default;
};

std::vector<WeightOutcome> solve_weight_batch(std::span<const WeightInstance> instances, Execution mode);

struct LemmaInstance {
  RationalMatrix q;
  RationalVector x;
};

/// Mixes three kinds of x: unconstrained random rationals, Q^{-1}(-c) for a
/// random c >= 0 (hypothesis holds), and the latter nudged by +-1/8 in one slot.
std::vector<LemmaInstance> lemma_instances(std::size_t count, std::uint64_t seed, std::size_t max_n = 6);

struct LemmaOutcome {
  bool hypothesis = false;   // every entry of Q x <= 0
  bool nonnegative = false;  // every entry of x >= 0
  std::string error;

  bool operator==(const LemmaOutcome&) const = default;
};

std::vector<LemmaOutcome> lemma_batch(std::span<const LemmaInstance> instances, Execution mode);

struct CorpusOutcome {
  std::string name;
  std::optional<NeighborhoodModel> model;
  std::optional<ModelReport> report;
  std::optional<HorizontalOBD> obd;  // present when the binding hypothesis holds
  std::string error;
  bool invariant_failure = false;

  bool operator==(const CorpusOutcome&) const = default;
};

/// build_model + verify_model, plus assemble_obd wherever -s_v - d_v >= 0 holds.
std::vector<CorpusOutcome> verify_corpus(std::span<const NamedGraph> graphs, Execution mode);

}  // namespace plumb
