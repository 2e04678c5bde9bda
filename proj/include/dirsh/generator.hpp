#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "dirsh/bandit.hpp"
#include "dirsh/circuit.hpp"
#include "dirsh/placement.hpp"
#include "dirsh/topology.hpp"

namespace dirsh {

enum class Objective { kSwaps, kDepth };

std::string_view objective_name(Objective objective);
/// Accepts "swaps" / "sw" and "depth" / "de".
std::optional<Objective> parse_objective(std::string_view text);

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits of one draw.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// One gate of a routed sequence.
struct PlacedGate {
  GateKind kind = GateKind::kUnary;
  /// Gate id in the routed circuit; -1 for inserted swaps.
  int source = -1;
  std::array<int, 2> physical{-1, -1};
  int level = 0;

  friend bool operator==(const PlacedGate&, const PlacedGate&) = default;
};

/// A routed circuit: the placed sequence plus its metrics. `depth` is the
/// maximum level (kEmptyDepth when nothing is placed).
struct Solution {
  std::vector<PlacedGate> placed;
  Assignment initial;
  Assignment final_assignment;
  int swaps = 0;
  int depth = kEmptyDepth;

  int layers() const { return depth + 1; }
};

/// (primary, secondary) objective pair; lower is better.
std::pair<int, int> objective_key(const Solution& s, Objective objective);

/// ASAP levels of a placed sequence. Each gate sits one level above the
/// latest earlier gate sharing a physical qubit or preceding it in `circuit`.
std::vector<int> assign_levels(const Circuit& circuit, std::span<const PlacedGate> placed,
                               int num_physical);

struct GeneratorConfig {
  double restart_probability = 0.1;
  /// Keep equal-D_sum swaps only when they lower D_min, instead of when they
  /// leave it unchanged.
  bool strict_prune = false;
  /// Skip swap pruning altogether.
  bool disable_prune = false;
  /// Placement steps before an attempt is abandoned; unset = default_step_cap.
  std::optional<long> step_cap;
  double weight_floor = 1e-6;
  /// Cross-check the incremental D_sum against a full recount at every step.
  bool verify_incremental = false;
};

/// 20 * chunk gates + 50 * physical qubits.
long default_step_cap(std::size_t chunk_gates, int num_physical);

struct Candidate {
  /// Original gate id, or -1 for a swap.
  int gate = -1;
  /// Index into Topology::swap_set(), or -1 for an original gate.
  int swap = -1;
  int d_sum = 0;
  int d_min = 0;

  bool is_swap() const { return swap >= 0; }
};

struct CandidateSet {
  std::vector<Candidate> items;
  /// Layer the candidates were computed for (depth mode), else -1.
  int layer = -1;
  /// Set when pruning emptied the set and the unpruned swaps were restored.
  bool fallback = false;

  bool empty() const { return items.empty(); }
  std::size_t size() const { return items.size(); }
};

/// Roulette weights (1 - nsum + floor)^beta1 * (1 - nmin + floor)^beta2, where
/// nsum and nmin are d_sum and d_min min-max normalized over `candidates`
/// (all zero when the range is empty).
std::vector<double> selection_weights(std::span<const Candidate> candidates, const Arm& arm,
                                      double floor = 1e-6);
std::vector<double> selection_probabilities(std::span<const Candidate> candidates,
                                            const Arm& arm, double floor = 1e-6);

/// Index drawn with probability proportional to `weights`.
std::size_t roulette(std::span<const double> weights, Rng& rng);

/// Index of the chosen candidate. Throws InternalError when empty.
std::size_t select_gate(std::span<const Candidate> candidates, const Arm& arm, Rng& rng,
                        double floor = 1e-6);

/// Routing state of one chunk while a solution is being built.
///
/// Tracks placed gates, the assignment, the front set with its running D_sum,
/// and the per-physical-qubit level of the last gate placed there.
class ChunkState {
 public:
  ChunkState(const Circuit& chunk, const Topology& topology);

  void reset(const Assignment& initial);

  bool complete() const { return placed_originals_ == chunk_->size(); }
  std::size_t placed_originals() const { return placed_originals_; }
  std::size_t steps() const { return sequence_.size(); }

  GateState state(int gate) const;
  bool executable(int gate) const;

  /// Places original gate `gate`; it must be executable.
  void place_original(int gate);
  /// Places swap `swap_index` of the topology's swap set.
  void place_swap(int swap_index);

  const Assignment& assignment() const { return assignment_; }
  const FrontSet& front() const { return front_; }
  /// D_sum of the current assignment, maintained incrementally.
  int front_sum() const { return front_sum_; }
  int front_min() const;
  /// Unplaced gates whose predecessors are all placed.
  std::span<const int> ready() const { return ready_; }
  int max_level() const { return max_level_; }
  int last_level(int physical) const {
    return last_level_[static_cast<std::size_t>(physical)];
  }
  int gate_level(int gate) const { return gate_level_[static_cast<std::size_t>(gate)]; }

  /// Executable originals followed by every swap, unevaluated.
  CandidateSet candidates_sw() const;
  /// Executable gates that can receive level `layer`: physical qubits free at
  /// `layer` and predecessors below it. Never advances the layer.
  CandidateSet candidates_at_layer(int layer) const;
  /// candidates_at_layer, advancing `layer` until something qualifies.
  CandidateSet candidates_de(int& layer) const;

  /// Fills d_sum / d_min of every candidate.
  void evaluate(CandidateSet& candidates) const;
  /// Drops swaps that neither lower D_sum nor (at equal D_sum) keep D_min
  /// (lower it, when `strict`). All swaps are dropped on an empty front.
  void prune(CandidateSet& candidates, bool strict) const;

  Solution solution() const;

 private:
  int compute_level(std::span<const int> physical, int gate) const;
  void record(PlacedGate pg);
  void add_ready(int gate);

  const Circuit* chunk_;
  const Topology* topology_;
  std::vector<int> swap_a_;
  std::vector<int> swap_b_;

  Assignment initial_;
  Assignment assignment_;
  std::vector<PlacedGate> sequence_;
  std::vector<char> placed_;
  std::vector<int> missing_preds_;
  std::vector<int> gate_level_;
  std::vector<int> ready_;
  std::vector<int> front_gate_of_;  // logical qubit -> front gate, or -1
  FrontSet front_;
  int front_sum_ = 0;
  std::vector<int> last_level_;
  int max_level_ = -1;
  int swaps_ = 0;
  std::size_t placed_originals_ = 0;
};

struct GenerationResult {
  /// Empty when the attempt hit the step cap.
  std::optional<Solution> solution;
  bool restarted = false;
  long fallbacks = 0;
  long steps = 0;
};

/// Builds one complete solution for `chunk` starting from `initial`.
///
/// With probability `restart_probability` (and only when `best` is given) the
/// attempt starts from the gates of `best` at level <= depth / 2. Every
/// decision pulls `bandit` for the selection exponents; settling the episode
/// is left to the caller.
GenerationResult generate_solution(const Circuit& chunk, const Topology& topology,
                                   Objective objective, const GeneratorConfig& config,
                                   const Assignment& initial, const Solution* best,
                                   UcbBandit& bandit, Rng& rng);

}  // namespace dirsh
