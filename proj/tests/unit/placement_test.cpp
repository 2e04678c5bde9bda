#include <gtest/gtest.h>

#include "dirsh/errors.hpp"
#include "dirsh/placement.hpp"
#include "instances.hpp"
#include "oracles.hpp"

namespace dirsh {
namespace {

TEST(DefaultAssignment, Identity) {
  const Assignment a = default_assignment(3, make_line(3));
  EXPECT_EQ(std::vector<int>(a.forward().begin(), a.forward().end()), (std::vector<int>{0, 1, 2}));
}

TEST(DefaultAssignment, FullTokyo) {
  const Assignment a = default_assignment(20, builtin_tokyo());
  for (int q = 0; q < 20; ++q) EXPECT_EQ(a.physical_of(q), q);
}

TEST(DefaultAssignment, TooWide) {
  EXPECT_THROW(default_assignment(21, builtin_tokyo()), CapacityError);
}

TEST(Swap, Transposition) {
  const Topology t = make_line(3);
  const Assignment a = apply_swap(default_assignment(3, t), t, 0, 1);
  EXPECT_EQ(a.physical_of(0), 1);
  EXPECT_EQ(a.physical_of(1), 0);
  EXPECT_EQ(a.logical_at(0), 1);
}

TEST(Swap, Involution) {
  const Topology t = make_line(3);
  const Assignment id = default_assignment(3, t);
  EXPECT_EQ(apply_swap(apply_swap(id, t, 1, 2), t, 1, 2), id);
}

TEST(Swap, NonAdjacent) {
  const Topology t = make_line(3);
  EXPECT_THROW(apply_swap(default_assignment(3, t), t, 0, 2), AdjacencyError);
}

TEST(Swap, MovesIntoEmptyNode) {
  const Topology t = make_line(4);
  const Assignment a = apply_swap(default_assignment(2, t), t, 1, 2);
  EXPECT_EQ(a.physical_of(1), 2);
  EXPECT_EQ(a.logical_at(1), -1);
}

TEST(Swap, RandomSequencesStayInjective) {
  const Topology t = builtin_tokyo();
  Rng rng(17);
  Assignment a = Assignment::from_forward(testing::random_forward(14, 20, rng), 20);
  for (int step = 0; step < 2000; ++step) {
    const Edge e = t.edges()[rng() % t.edges().size()];
    a.apply_swap(t, e.a, e.b);
    for (int q = 0; q < a.num_logical(); ++q) ASSERT_EQ(a.logical_at(a.physical_of(q)), q);
    int occupied = 0;
    for (int p = 0; p < 20; ++p) occupied += a.logical_at(p) >= 0;
    ASSERT_EQ(occupied, 14);
  }
}

TEST(FromForward, Rejections) {
  EXPECT_THROW(Assignment::from_forward({0, 0}, 3), ParameterError);
  EXPECT_THROW(Assignment::from_forward({0, 3}, 3), ParameterError);
}

TEST(Classify, States) {
  const Topology t = make_line(3);
  const Circuit c = Circuit::from_sequence(
      3, {make_binary("cx", 0, 1), make_binary("cx", 0, 2), make_unary("h", 0)});
  const Assignment id = default_assignment(3, t);
  std::vector<char> placed(3, 0);
  EXPECT_EQ(classify(c, 0, placed, id, t), GateState::kExecutable);
  EXPECT_EQ(classify(c, 1, placed, id, t), GateState::kNotSupported);
  placed[0] = 1;
  EXPECT_EQ(classify(c, 1, placed, id, t), GateState::kSupported);
  EXPECT_EQ(classify(c, 2, placed, id, t), GateState::kNotSupported);
  placed[1] = 1;
  EXPECT_EQ(classify(c, 2, placed, id, t), GateState::kExecutable);
}

TEST(FrontDistances, PathExamples) {
  const Topology t = make_line(4);
  const Assignment id = default_assignment(4, t);
  FrontSet q;
  EXPECT_EQ(d_sum(id, q, t), 0);
  EXPECT_EQ(d_min(id, q, t), kNoDistance);
  q.add(0, 0, 3);
  EXPECT_EQ(d_sum(id, q, t), 3);
  EXPECT_EQ(d_min(id, q, t), 3);
  q.add(1, 1, 2);
  EXPECT_EQ(d_sum(id, q, t), 4);
  EXPECT_EQ(d_min(id, q, t), 1);
  EXPECT_TRUE(q.remove(0));
  EXPECT_FALSE(q.remove(0));
  EXPECT_EQ(d_sum(id, q, t), 1);
}

TEST(FrontDistances, SumAtLeastMinAtLeastOne) {
  const Topology t = builtin_tokyo();
  const auto pairs_all = testing::edge_pairs(t);
  const auto dist = testing::floyd_warshall(20, pairs_all);
  Rng rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    const auto fwd = testing::random_forward(12, 20, rng);
    const Assignment a = Assignment::from_forward(fwd, 20);
    FrontSet q;
    std::vector<std::pair<int, int>> pairs;
    const int k = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < k; ++i) {
      const int q0 = static_cast<int>(rng() % 12);
      int q1 = static_cast<int>(rng() % 11);
      if (q1 >= q0) ++q1;
      q.add(i, q0, q1);
      pairs.emplace_back(q0, q1);
    }
    const int s = d_sum(a, q, t);
    const int m = d_min(a, q, t);
    EXPECT_EQ(s, testing::brute_dsum(fwd, pairs, dist, 20));
    EXPECT_EQ(m, testing::brute_dmin(fwd, pairs, dist, 20));
    EXPECT_GE(s, m);
    EXPECT_GE(m, 1);
  }
}

}  // namespace
}  // namespace dirsh
