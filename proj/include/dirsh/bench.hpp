#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dirsh/generator.hpp"

namespace dirsh {

/// Percentage deviation 100 * (reference - value) / reference; positive means
/// `value` is better. A zero reference yields 0 when `value` is also 0 and
/// nullopt (undefined) otherwise.
std::optional<double> delta(double reference, double value);

/// One of our runs: objective value reached on an instance.
struct ResultRow {
  std::string instance;
  Objective objective = Objective::kSwaps;
  double budget = 0.0;
  std::uint64_t seed = 0;
  int value = 0;
};

/// A comparator's value for the same (instance, objective, budget).
struct ReferenceRow {
  std::string instance;
  Objective objective = Objective::kSwaps;
  double budget = 0.0;
  int value = 0;
};

struct InstanceDelta {
  std::string instance;
  double budget = 0.0;
  Objective objective = Objective::kSwaps;
  int reference = 0;
  /// Best value over seeds.
  int value = 0;
  std::optional<double> delta;
};

struct BudgetSummary {
  Objective objective = Objective::kSwaps;
  double budget = 0.0;
  int instances = 0;
  int wins = 0;
  int ties = 0;
  int losses = 0;
  /// Rows whose delta is undefined; excluded from the counts and the average.
  int flagged = 0;
  double average_delta = 0.0;
};

struct BenchmarkReport {
  std::vector<InstanceDelta> rows;
  std::vector<BudgetSummary> summaries;
  /// "instance/objective/budget" keys present on only one side.
  std::vector<std::string> unmatched;
};

/// Aggregates results best-over-seeds, pairs them with reference rows and
/// counts wins (delta > 0), ties (delta == 0) and losses per objective and
/// budget. Output order is sorted and therefore reproducible.
BenchmarkReport benchmark_report(std::span<const ResultRow> results,
                                 std::span<const ReferenceRow> references);

/// Per-instance CSV:
/// instance,budget,ref_swaps,dirsh_swaps,delta_swaps,ref_depth,dirsh_depth,delta_depth
std::string report_csv(const BenchmarkReport& report);

/// Summary CSV: objective,budget,instances,wins,ties,losses,flagged,average_delta
std::string summary_csv(const BenchmarkReport& report);

/// "budget, wins, ties, losses", e.g. "10, 108, 38, 4".
std::string format_table_row(double budget, int wins, int ties, int losses);

/// Reference CSV with header instance,objective,budget,value.
std::vector<ReferenceRow> parse_reference_csv(std::string_view text);
std::string reference_csv(std::span<const ReferenceRow> rows);

}  // namespace dirsh
