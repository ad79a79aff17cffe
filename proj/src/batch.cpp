#include "plumb/batch.hpp"

#include "plumb/classify.hpp"
#include "plumb/random.hpp"

namespace plumb {

namespace {

template <typename Fn>
void for_each_index(std::size_t count, Execution mode, Fn&& fn) {
  const long n = static_cast<long>(count);
  if (mode == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) fn(static_cast<std::size_t>(i));
  } else {
    for (long i = 0; i < n; ++i) fn(static_cast<std::size_t>(i));
  }
}

Rational random_rational(SplitMix64& rng, long num_lo, long num_hi, long den_hi) {
  const long p = rng.uniform(num_lo, num_hi);
  const long q = rng.uniform(1, den_hi);
  return make_rational(p, q);
}

}  // namespace

std::vector<WeightInstance> weight_instances(std::size_t count, std::uint64_t seed, std::size_t max_n) {
  SplitMix64 rng(seed);
  std::vector<WeightInstance> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_n)));
    WeightInstance inst{random_negdef_graph_matrix(n, 2, rng.next()), {}};
    for (std::size_t i = 0; i < n; ++i) inst.area.push_back(random_rational(rng, 1, 12, 6));
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<WeightOutcome> solve_weight_batch(std::span<const WeightInstance> instances, Execution mode) {
  std::vector<WeightOutcome> out(instances.size());
  for_each_index(instances.size(), mode, [&](std::size_t i) {
    try {
      out[i].z = weight_vector(instances[i].q, instances[i].area);
      out[i].positive = true;
    } catch (const std::exception& e) {
      out[i].error = e.what();
    }
  });
  return out;
}

std::vector<LemmaInstance> lemma_instances(std::size_t count, std::uint64_t seed, std::size_t max_n) {
  SplitMix64 rng(seed);
  std::vector<LemmaInstance> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_n)));
    LemmaInstance inst{random_negdef_graph_matrix(n, 2, rng.next()), {}};
    const long kind = rng.uniform(0, 2);
    if (kind == 0) {
      for (std::size_t i = 0; i < n; ++i) inst.x.push_back(random_rational(rng, -6, 6, 4));
    } else {
      RationalVector c;
      for (std::size_t i = 0; i < n; ++i) c.push_back(-random_rational(rng, 0, 6, 4));
      inst.x = solve(inst.q, c);
      if (kind == 2) {
        const auto slot = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
        inst.x[slot] += rng.uniform(0, 1) == 0 ? make_rational(1, 8) : make_rational(-1, 8);
      }
    }
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<LemmaOutcome> lemma_batch(std::span<const LemmaInstance> instances, Execution mode) {
  std::vector<LemmaOutcome> out(instances.size());
  for_each_index(instances.size(), mode, [&](std::size_t i) {
    try {
      out[i].hypothesis = lemma_cone_check(instances[i].q, instances[i].x);
      out[i].nonnegative = true;
      for (const auto& v : instances[i].x) out[i].nonnegative = out[i].nonnegative && sgn(v) >= 0;
    } catch (const std::exception& e) {
      out[i].error = e.what();
    }
  });
  return out;
}

std::vector<CorpusOutcome> verify_corpus(std::span<const NamedGraph> graphs, Execution mode) {
  std::vector<CorpusOutcome> out(graphs.size());
  for_each_index(graphs.size(), mode, [&](std::size_t i) {
    auto& o = out[i];
    o.name = graphs[i].name;
    try {
      o.model = build_model(graphs[i].graph);
      o.report = verify_model(*o.model);
      if (obd_hypothesis(graphs[i].graph).holds) o.obd = assemble_obd(graphs[i].graph, o.model->split);
    } catch (const InvariantError& e) {
      o.error = e.what();
      o.invariant_failure = true;
    } catch (const std::exception& e) {
      o.error = e.what();
    }
  });
  return out;
}

}  // namespace plumb
