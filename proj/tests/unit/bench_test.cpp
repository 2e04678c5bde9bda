#include <gtest/gtest.h>

#include "dirsh/bench.hpp"
#include "dirsh/errors.hpp"

namespace dirsh {
namespace {

TEST(Delta, Formula) {
  EXPECT_DOUBLE_EQ(*delta(200, 180), 10.0);
  EXPECT_DOUBLE_EQ(*delta(100, 100), 0.0);
  EXPECT_DOUBLE_EQ(*delta(100, 120), -20.0);
}

TEST(Delta, ZeroReference) {
  EXPECT_DOUBLE_EQ(*delta(0, 0), 0.0);
  EXPECT_FALSE(delta(0, 3));
}

std::vector<ReferenceRow> refs(Objective o, double budget,
                               std::initializer_list<std::pair<const char*, int>> rows) {
  std::vector<ReferenceRow> out;
  for (const auto& [name, v] : rows) out.push_back({name, o, budget, v});
  return out;
}

TEST(Report, WinTieLossAndAverage) {
  // Deltas +5, 0, -2.
  const auto ref = refs(Objective::kSwaps, 10, {{"a", 100}, {"b", 50}, {"c", 100}});
  const std::vector<ResultRow> res{{"a", Objective::kSwaps, 10, 0, 95},
                                   {"b", Objective::kSwaps, 10, 0, 50},
                                   {"c", Objective::kSwaps, 10, 0, 102}};
  const auto r = benchmark_report(res, ref);
  ASSERT_EQ(r.summaries.size(), 1u);
  const auto& s = r.summaries[0];
  EXPECT_EQ(s.wins, 1);
  EXPECT_EQ(s.ties, 1);
  EXPECT_EQ(s.losses, 1);
  EXPECT_DOUBLE_EQ(s.average_delta, 1.0);
  EXPECT_TRUE(r.unmatched.empty());
}

TEST(Report, AllTies) {
  const auto ref = refs(Objective::kDepth, 20, {{"a", 7}, {"b", 9}});
  const std::vector<ResultRow> res{{"a", Objective::kDepth, 20, 0, 7},
                                   {"b", Objective::kDepth, 20, 1, 9}};
  const auto s = benchmark_report(res, ref).summaries.at(0);
  EXPECT_EQ(s.wins, 0);
  EXPECT_EQ(s.ties, 2);
  EXPECT_DOUBLE_EQ(s.average_delta, 0.0);
}

TEST(Report, BestOverSeeds) {
  const auto ref = refs(Objective::kSwaps, 10, {{"a", 10}});
  const std::vector<ResultRow> res{{"a", Objective::kSwaps, 10, 0, 12},
                                   {"a", Objective::kSwaps, 10, 1, 8},
                                   {"a", Objective::kSwaps, 10, 2, 11}};
  const auto r = benchmark_report(res, ref);
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_EQ(r.rows[0].value, 8);
  EXPECT_DOUBLE_EQ(*r.rows[0].delta, 20.0);
}

TEST(Report, FlaggedAndUnmatched) {
  const auto ref = refs(Objective::kSwaps, 10, {{"a", 0}, {"b", 4}, {"only-ref", 3}});
  const std::vector<ResultRow> res{{"a", Objective::kSwaps, 10, 0, 2},
                                   {"b", Objective::kSwaps, 10, 0, 2},
                                   {"only-ours", Objective::kSwaps, 10, 0, 2}};
  const auto r = benchmark_report(res, ref);
  const auto& s = r.summaries.at(0);
  EXPECT_EQ(s.flagged, 1);
  EXPECT_EQ(s.instances, 1);
  EXPECT_DOUBLE_EQ(s.average_delta, 50.0);
  EXPECT_EQ(r.unmatched, (std::vector<std::string>{"only-ours/swaps/10", "only-ref/swaps/10"}));
}

TEST(Report, TableRowFormat) {
  EXPECT_EQ(format_table_row(10, 108, 38, 4), "10, 108, 38, 4");
  EXPECT_EQ(format_table_row(1.5, 1, 0, 0), "1.5, 1, 0, 0");
}

TEST(Report, CsvLayoutIsFixed) {
  std::vector<ReferenceRow> ref = refs(Objective::kSwaps, 10, {{"a", 200}});
  ref.push_back({"a", Objective::kDepth, 10, 0});
  const std::vector<ResultRow> res{{"a", Objective::kSwaps, 10, 0, 180},
                                   {"a", Objective::kDepth, 10, 0, 4}};
  const auto r = benchmark_report(res, ref);
  EXPECT_EQ(report_csv(r),
            "instance,budget,ref_swaps,dirsh_swaps,delta_swaps,ref_depth,dirsh_depth,delta_depth\n"
            "a,10,200,180,10.0000,0,4,NA\n");
  EXPECT_EQ(summary_csv(r),
            "objective,budget,instances,wins,ties,losses,flagged,average_delta\n"
            "swaps,10,1,1,0,0,0,10.0000\n"
            "depth,10,0,0,0,0,1,0.0000\n");
  EXPECT_EQ(report_csv(benchmark_report(res, ref)), report_csv(r));
}

TEST(ReferenceCsv, RoundTrip) {
  const std::string text =
      "instance,objective,budget,value\n"
      "# comment\n"
      "adder,swaps,10,12\n"
      "adder,depth,10,40\r\n";
  const auto rows = parse_reference_csv(text);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1].objective, Objective::kDepth);
  EXPECT_EQ(rows[1].value, 40);
  EXPECT_EQ(reference_csv(rows),
            "instance,objective,budget,value\nadder,swaps,10,12\nadder,depth,10,40\n");
}

TEST(ReferenceCsv, Rejections) {
  EXPECT_THROW(parse_reference_csv("name,value\n"), ParseError);
  EXPECT_THROW(parse_reference_csv("instance,objective,budget,value\na,swaps,10\n"), ParseError);
  EXPECT_THROW(parse_reference_csv("instance,objective,budget,value\na,both,10,3\n"), ParseError);
  EXPECT_THROW(parse_reference_csv("instance,objective,budget,value\na,swaps,x,3\n"), ParseError);
}

}  // namespace
}  // namespace dirsh
