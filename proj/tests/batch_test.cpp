#include <gtest/gtest.h>

#include "plumb/batch.hpp"
#include "plumb/json_io.hpp"

using namespace plumb;

TEST(Batch, WeightParallelMatchesSerial) {
  const auto inst = weight_instances(400, 99, 6);
  const auto serial = solve_weight_batch(inst, Execution::Serial);
  const auto parallel = solve_weight_batch(inst, Execution::Parallel);
  EXPECT_EQ(serial, parallel);
}

TEST(Batch, LemmaParallelMatchesSerial) {
  const auto inst = lemma_instances(400, 98, 6);
  EXPECT_EQ(lemma_batch(inst, Execution::Serial), lemma_batch(inst, Execution::Parallel));
}

TEST(Batch, CorpusParallelMatchesSerial) {
  const auto graphs = standard_corpus(120, 97);
  const auto serial = verify_corpus(graphs, Execution::Serial);
  const auto parallel = verify_corpus(graphs, Execution::Parallel);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i], parallel[i]) << serial[i].name;
    ASSERT_TRUE(serial[i].model.has_value()) << serial[i].error;
    EXPECT_EQ(dump(json(*serial[i].model), false), dump(json(*parallel[i].model), false));
  }
}

TEST(Batch, CorpusOutcomeRecordsUserErrors) {
  const std::vector<NamedGraph> graphs{{"rb2", rational_blowdown(2)}, {"c22", chain({-2, -2})}};
  const auto out = verify_corpus(graphs, Execution::Parallel);
  EXPECT_FALSE(out[0].model.has_value());
  EXPECT_FALSE(out[0].invariant_failure);
  EXPECT_NE(out[0].error.find("isolated vertex"), std::string::npos);
  EXPECT_TRUE(out[1].report->ok());
  EXPECT_TRUE(out[1].obd.has_value());
}

TEST(Batch, InstanceStreamsAreSeedDeterministic) {
  const auto a = weight_instances(50, 5, 6);
  const auto b = weight_instances(50, 5, 6);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].q, b[i].q);
    EXPECT_EQ(a[i].area, b[i].area);
  }
}
