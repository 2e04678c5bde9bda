#include "dirsh/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dirsh/errors.hpp"

namespace dirsh {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Clock::duration to_duration(double seconds) {
  return std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
}

// Tries to force a feasible solution after every budgeted attempt hit the
// step cap: pruning disabled and a growing cap.
constexpr int kEscalationRounds = 4;

}  // namespace

void check_config(const RunConfig& config) {
  if (!(config.time_budget_seconds > 0.0) || !std::isfinite(config.time_budget_seconds)) {
    throw ParameterError("time budget must be a positive number of seconds");
  }
  if (config.chunk_count_override && *config.chunk_count_override <= 0) {
    throw ParameterError("chunk count must be positive");
  }
  if (config.max_generations && *config.max_generations <= 0) {
    throw ParameterError("generation budget must be positive");
  }
  const auto& g = config.generator;
  if (!(g.restart_probability >= 0.0 && g.restart_probability <= 1.0)) {
    throw ParameterError("restart probability must lie in [0, 1]");
  }
  if (g.step_cap && *g.step_cap <= 0) throw ParameterError("step cap must be positive");
  if (!(g.weight_floor > 0.0)) throw ParameterError("weight floor must be positive");
  // Validates arms and exploration constant.
  UcbBandit probe(config.arms, config.exploration);
}

long RunReport::generations() const {
  long total = 0;
  for (const auto& c : chunks) total += c.generations;
  return total;
}

long RunReport::discards() const {
  long total = 0;
  for (const auto& c : chunks) total += c.discards;
  return total;
}

double RunReport::longest_attempt_seconds() const {
  double longest = 0.0;
  for (const auto& c : chunks) longest = std::max(longest, c.longest_attempt_seconds);
  return longest;
}

int chunk_count(std::size_t num_gates) {
  if (num_gates < 500) return 1;
  if (num_gates < 1000) return 10;
  if (num_gates < 10000) return 20;
  if (num_gates < 20000) return 50;
  if (num_gates < 50000) return 100;
  return 150;
}

double chunk_budget_seconds(double total_seconds, int n_c) {
  const double whole = std::floor(total_seconds / n_c);
  return whole >= 1.0 ? whole : total_seconds / n_c;
}

ChunkResult optimize_chunk(const Circuit& chunk, const Topology& topology,
                           const Assignment& initial, const ChunkBudget& budget,
                           const RunConfig& config, UcbBandit& bandit, Rng& rng) {
  const auto start = Clock::now();
  ChunkResult result;
  ChunkStats& stats = result.stats;
  std::optional<Solution> best;
  std::pair<int, int> best_key;
  const std::pair<int, int> floor_key = config.objective == Objective::kSwaps
                                            ? std::pair{0, chunk.depth()}
                                            : std::pair{chunk.depth(), 0};

  auto exhausted = [&] {
    if (budget.max_generations) return stats.generations >= *budget.max_generations;
    return Clock::now() >= budget.deadline;
  };

  auto attempt = [&](const GeneratorConfig& gen) {
    const auto t0 = Clock::now();
    GenerationResult r = generate_solution(chunk, topology, config.objective, gen, initial,
                                           best ? &*best : nullptr, bandit, rng);
    ++stats.generations;
    stats.fallbacks += r.fallbacks;
    if (r.restarted) ++stats.restarts;
    if (!r.solution) {
      ++stats.discards;
      bandit.settle_discard();
    } else {
      const auto key = objective_key(*r.solution, config.objective);
      bandit.settle_objective(key.first);
      if (!best || key < best_key) {
        best_key = key;
        best = std::move(*r.solution);
      }
    }
    if (config.record_trace && best) stats.incumbent_trace.push_back(best_key);
    stats.longest_attempt_seconds = std::max(stats.longest_attempt_seconds, seconds_since(t0));
  };

  while (stats.generations == 0 || !(exhausted() || (best && best_key == floor_key))) {
    attempt(config.generator);
  }

  if (!best) {
    GeneratorConfig forced = config.generator;
    forced.disable_prune = true;
    long cap = forced.step_cap.value_or(default_step_cap(chunk.size(), topology.num_qubits()));
    for (int round = 0; round < kEscalationRounds && !best; ++round) {
      cap *= 4;
      forced.step_cap = cap;
      ++stats.escalations;
      attempt(forced);
    }
    if (!best) {
      throw InternalError("no feasible solution for a chunk of " +
                          std::to_string(chunk.size()) + " gates after escalation");
    }
  }

  stats.best_swaps = best->swaps;
  stats.best_depth = best->depth;
  stats.elapsed_seconds = seconds_since(start);
  result.best = std::move(*best);
  return result;
}

Solution concatenate(const Circuit& circuit, const ChunkPlan& plan,
                     std::span<const Solution> parts, int num_physical) {
  if (parts.size() != plan.chunks.size()) {
    throw ParameterError("one solution per chunk is required");
  }
  Solution out;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    const Solution& part = parts[j];
    if (j == 0) {
      out.initial = part.initial;
    } else if (!(part.initial == parts[j - 1].final_assignment)) {
      throw ParameterError("chunk " + std::to_string(j) +
                           " does not start from the previous final assignment");
    }
    const auto& ids = plan.source_ids[j];
    for (PlacedGate pg : part.placed) {
      if (pg.source >= 0) pg.source = ids[static_cast<std::size_t>(pg.source)];
      out.placed.push_back(pg);
    }
    out.swaps += part.swaps;
    out.final_assignment = part.final_assignment;
  }
  const auto levels = assign_levels(circuit, out.placed, num_physical);
  for (std::size_t i = 0; i < levels.size(); ++i) out.placed[i].level = levels[i];
  out.depth = depth_of(levels);
  return out;
}

RunReport optimize(const Circuit& circuit, const Topology& topology, const RunConfig& config) {
  check_config(config);
  const auto run_start = Clock::now();
  Assignment sigma = default_assignment(circuit.num_qubits(), topology);

  const int requested = config.chunk_count_override.value_or(chunk_count(circuit.size()));
  const ChunkPlan plan = split_chunks(circuit, requested);
  const int n_c = plan.effective();
  // Concatenation is another linear pass over the circuit; the last chunk
  // stops early by the cost of the split so the total stays within T.
  const auto finish_reserve =
      std::min(Clock::now() - run_start, to_duration(0.1 * config.time_budget_seconds));

  RunReport report;
  report.effective_chunks = n_c;
  report.chunk_budget_seconds = chunk_budget_seconds(config.time_budget_seconds, n_c);

  Rng rng(config.seed);
  UcbBandit bandit(config.arms, config.exploration);
  std::vector<Solution> parts;
  parts.reserve(plan.chunks.size());

  for (int j = 0; j < n_c; ++j) {
    bandit.reset();
    const auto chunk_start = Clock::now();
    const auto schedule_end =
        j + 1 == n_c ? run_start + to_duration(config.time_budget_seconds) - finish_reserve
                     : run_start + to_duration(report.chunk_budget_seconds * (j + 1));
    ChunkBudget budget;
    budget.max_generations = config.max_generations;
    budget.deadline = config.carry_forward
                          ? schedule_end
                          : std::min(chunk_start + to_duration(report.chunk_budget_seconds),
                                     schedule_end);
    ChunkResult r = optimize_chunk(plan.chunks[static_cast<std::size_t>(j)], topology, sigma,
                                   budget, config, bandit, rng);
    sigma = r.best.final_assignment;
    parts.push_back(std::move(r.best));
    report.chunks.push_back(std::move(r.stats));
  }

  report.solution = concatenate(circuit, plan, parts, topology.num_qubits());
  report.wall_seconds = seconds_since(run_start);
  return report;
}

}  // namespace dirsh
