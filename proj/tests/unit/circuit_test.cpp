#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "dirsh/circuit.hpp"
#include "dirsh/errors.hpp"
#include "instances.hpp"
#include "oracles.hpp"

namespace dirsh {
namespace {

Circuit chain(int n) {
  std::vector<Gate> gates;
  for (int i = 0; i < n; ++i) gates.push_back(make_unary("h", 0));
  return Circuit::from_sequence(1, std::move(gates));
}

TEST(Levels, SingleGateIsRoot) {
  const Circuit c = Circuit::from_sequence(1, {make_unary("x", 0)});
  EXPECT_EQ(c.level(0), 0);
  EXPECT_EQ(c.depth(), 0);
}

TEST(Levels, ChainCountsUp) {
  const Circuit c = chain(3);
  EXPECT_EQ(c.levels(), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(c.depth(), 2);
}

TEST(Levels, JoinTakesMaxOfEqualPredecessors) {
  const Circuit c = Circuit::from_sequence(
      2, {make_unary("h", 0), make_unary("h", 1), make_binary("cx", 0, 1)});
  EXPECT_EQ(c.levels(), (std::vector<int>{0, 0, 1}));
}

TEST(Levels, ParallelGatesShareLevelZero) {
  const Circuit c = Circuit::from_sequence(4, {make_binary("cx", 0, 1), make_binary("cx", 2, 3)});
  EXPECT_EQ(c.depth(), 0);
}

TEST(Levels, EmptyCircuitDepthSentinel) {
  const Circuit c = Circuit::from_sequence(3, {});
  EXPECT_EQ(c.depth(), kEmptyDepth);
  EXPECT_EQ(depth_of(std::vector<int>{}), -1);
}

TEST(Levels, CycleNamesAnEdge) {
  const std::vector<Precedence> edges{{0, 1}, {1, 2}, {2, 0}};
  try {
    compute_levels(3, edges);
    FAIL() << "cycle not detected";
  } catch (const StructuralError& e) {
    EXPECT_NE(std::string(e.what()).find("edge"), std::string::npos);
  }
}

TEST(Levels, AgreeWithRelaxationOracle) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Circuit c = testing::random_circuit(6, 40, 0.5, rng);
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : c.precedence_edges()) edges.push_back(e);
    EXPECT_EQ(c.levels(), testing::relaxation_levels(static_cast<int>(c.size()), edges));
    for (const auto& [a, b] : edges) EXPECT_LT(c.level(a), c.level(b));
  }
}

TEST(Circuit, SharedQubitGivesOneEdge) {
  const Circuit c = Circuit::from_sequence(2, {make_binary("cx", 0, 1), make_unary("h", 1)});
  EXPECT_EQ(c.precedence_edges(), (std::vector<Precedence>{{0, 1}}));
}

TEST(Circuit, DisjointQubitsGiveNoEdge) {
  const Circuit c = Circuit::from_sequence(3, {make_binary("cx", 0, 1), make_unary("h", 2)});
  EXPECT_TRUE(c.precedence_edges().empty());
}

TEST(Circuit, FullOrderNormalizesToChain) {
  // Full transitive per-qubit order on one qubit: 0<1, 0<2, 1<2.
  std::vector<Gate> gates{make_unary("h", 0), make_unary("x", 0), make_unary("t", 0)};
  const std::vector<Precedence> full{{0, 1}, {0, 2}, {1, 2}};
  const Circuit c(1, gates, full);
  EXPECT_EQ(c.precedence_edges(), (std::vector<Precedence>{{0, 1}, {1, 2}}));
  EXPECT_EQ(c.depth(), 2);
}

TEST(Circuit, ExtraDisjointEdgeIsKept) {
  std::vector<Gate> gates{make_unary("h", 0), make_unary("h", 1)};
  const std::vector<Precedence> edges{{0, 1}};
  const Circuit c(2, gates, edges);
  EXPECT_EQ(c.level(1), 1);
}

TEST(Circuit, UnorderedSharedQubitRejected) {
  std::vector<Gate> gates{make_unary("h", 0), make_unary("x", 0)};
  EXPECT_THROW(Circuit(1, gates, std::vector<Precedence>{}), StructuralError);
}

TEST(Circuit, OperandChecks) {
  EXPECT_THROW(Circuit::from_sequence(2, {make_unary("h", 2)}), StructuralError);
  EXPECT_THROW(Circuit::from_sequence(2, {make_binary("cx", 1, 1)}), StructuralError);
  EXPECT_THROW(Circuit::from_sequence(2, {make_unary("h", -1)}), StructuralError);
}

TEST(Chunks, EvenSplitOfTenLayers) {
  const Circuit c = chain(10);
  const ChunkPlan plan = split_chunks(c, 2);
  ASSERT_EQ(plan.effective(), 2);
  EXPECT_EQ(plan.source_ids[0], (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_EQ(plan.source_ids[1], (std::vector<int>{5, 6, 7, 8, 9}));
  EXPECT_EQ(plan.boundary_levels, (std::vector<int>{0, 5}));
}

TEST(Chunks, OneChunkIsIdentity) {
  Rng rng(3);
  const Circuit c = testing::random_circuit(5, 30, 0.4, rng);
  const ChunkPlan plan = split_chunks(c, 1);
  ASSERT_EQ(plan.effective(), 1);
  EXPECT_EQ(plan.chunks[0].size(), c.size());
  EXPECT_EQ(plan.chunks[0].levels(), c.levels());
  EXPECT_EQ(plan.chunks[0].precedence_edges(), c.precedence_edges());
}

TEST(Chunks, ThreeLayersIntoTwo) {
  const ChunkPlan plan = split_chunks(chain(3), 2);
  ASSERT_EQ(plan.effective(), 2);
  EXPECT_EQ(plan.source_ids[0], (std::vector<int>{0, 1}));
  EXPECT_EQ(plan.source_ids[1], (std::vector<int>{2}));
}

TEST(Chunks, SurplusChunksDropped) {
  const ChunkPlan plan = split_chunks(chain(3), 10);
  EXPECT_EQ(plan.requested, 10);
  EXPECT_EQ(plan.effective(), 3);
}

TEST(Chunks, ZeroIsParameterError) {
  EXPECT_THROW(split_chunks(chain(2), 0), ParameterError);
}

TEST(Chunks, PartitionAndForwardEdges) {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Circuit c = testing::random_circuit(7, 60, 0.6, rng);
    const int n_c = 1 + trial % 9;
    const ChunkPlan plan = split_chunks(c, n_c);
    std::vector<int> chunk_of(c.size(), -1);
    for (int j = 0; j < plan.effective(); ++j) {
      ASSERT_FALSE(plan.source_ids[static_cast<std::size_t>(j)].empty());
      for (int id : plan.source_ids[static_cast<std::size_t>(j)]) {
        ASSERT_EQ(chunk_of[static_cast<std::size_t>(id)], -1);
        chunk_of[static_cast<std::size_t>(id)] = j;
      }
    }
    for (int x : chunk_of) ASSERT_GE(x, 0);
    for (const auto& [a, b] : c.precedence_edges()) {
      EXPECT_LE(chunk_of[static_cast<std::size_t>(a)], chunk_of[static_cast<std::size_t>(b)]);
    }
  }
}

TEST(Chunks, LevelPrefixIsDownwardClosed) {
  Rng rng(8);
  const Circuit c = testing::random_circuit(6, 80, 0.5, rng);
  for (int cut = 0; cut <= c.depth(); ++cut) {
    for (const auto& [a, b] : c.precedence_edges()) {
      if (c.level(b) <= cut) EXPECT_LE(c.level(a), cut);
    }
  }
}

}  // namespace
}  // namespace dirsh
