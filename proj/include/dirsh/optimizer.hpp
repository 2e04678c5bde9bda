#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dirsh/bandit.hpp"
#include "dirsh/circuit.hpp"
#include "dirsh/generator.hpp"
#include "dirsh/topology.hpp"

namespace dirsh {

struct RunConfig {
  Objective objective = Objective::kSwaps;
  /// Total wall-clock budget T in seconds.
  double time_budget_seconds = 10.0;
  /// Fixed n_c; unset selects it from the circuit size.
  std::optional<int> chunk_count_override;
  std::uint64_t seed = 0;
  std::vector<Arm> arms = default_arm_grid();
  double exploration = kDefaultExploration;
  GeneratorConfig generator;
  /// Let a chunk use time left over by earlier chunks.
  bool carry_forward = false;
  /// Per-chunk generation budget. When set, chunks stop after this many
  /// attempts and the clock is never consulted, which makes runs reproducible.
  std::optional<long> max_generations;
  /// Keep the incumbent key after every generation in ChunkStats.
  bool record_trace = false;
};

/// Throws ParameterError on an unusable configuration.
void check_config(const RunConfig& config);

struct ChunkStats {
  long generations = 0;
  long discards = 0;
  long restarts = 0;
  long fallbacks = 0;
  long escalations = 0;
  int best_swaps = 0;
  int best_depth = kEmptyDepth;
  double elapsed_seconds = 0.0;
  double longest_attempt_seconds = 0.0;
  /// Incumbent (primary, secondary) after each generation; see record_trace.
  std::vector<std::pair<int, int>> incumbent_trace;
};

struct RunReport {
  Solution solution;
  std::vector<ChunkStats> chunks;
  int effective_chunks = 0;
  double chunk_budget_seconds = 0.0;
  double wall_seconds = 0.0;

  long generations() const;
  long discards() const;
  double longest_attempt_seconds() const;
};

/// Chunk count by circuit size:
/// <500: 1, <1000: 10, <10000: 20, <20000: 50, <50000: 100, otherwise 150.
int chunk_count(std::size_t num_gates);

/// Per-chunk time slice floor(T / n_c). When that floor is zero the exact
/// quotient T / n_c is used instead, so the total never exceeds T.
double chunk_budget_seconds(double total_seconds, int n_c);

/// Stop condition of one optimize_chunk call.
struct ChunkBudget {
  std::chrono::steady_clock::time_point deadline;
  std::optional<long> max_generations;
};

struct ChunkResult {
  Solution best;
  ChunkStats stats;
};

/// Repeatedly generates solutions for `chunk` until the budget runs out,
/// keeping the lexicographically best (primary objective, then the other).
/// At least one attempt always completes. Stops early once the incumbent
/// reaches the trivial lower bound (no swaps and the chunk's own depth).
ChunkResult optimize_chunk(const Circuit& chunk, const Topology& topology,
                           const Assignment& initial, const ChunkBudget& budget,
                           const RunConfig& config, UcbBandit& bandit, Rng& rng);

/// Chunks the circuit, optimizes the chunks in order (each starting from the
/// previous chunk's final assignment) and concatenates the results.
RunReport optimize(const Circuit& circuit, const Topology& topology, const RunConfig& config);

/// Joins per-chunk solutions into one over the source circuit and recomputes
/// levels globally. Chunk solution j must start where solution j-1 ended.
Solution concatenate(const Circuit& circuit, const ChunkPlan& plan,
                     std::span<const Solution> parts, int num_physical);

}  // namespace dirsh
