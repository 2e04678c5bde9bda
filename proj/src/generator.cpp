#include "dirsh/generator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dirsh/errors.hpp"
#include "dirsh/simd/swap_scores.hpp"

namespace dirsh {

std::string_view objective_name(Objective objective) {
  return objective == Objective::kSwaps ? "swaps" : "depth";
}

std::optional<Objective> parse_objective(std::string_view text) {
  if (text == "swaps" || text == "sw") return Objective::kSwaps;
  if (text == "depth" || text == "de") return Objective::kDepth;
  return std::nullopt;
}

std::pair<int, int> objective_key(const Solution& s, Objective objective) {
  return objective == Objective::kSwaps ? std::pair{s.swaps, s.depth}
                                        : std::pair{s.depth, s.swaps};
}

std::vector<int> assign_levels(const Circuit& circuit, std::span<const PlacedGate> placed,
                               int num_physical) {
  std::vector<int> last(static_cast<std::size_t>(num_physical), -1);
  std::vector<int> gate_level(circuit.size(), -1);
  std::vector<int> levels;
  levels.reserve(placed.size());
  for (const PlacedGate& pg : placed) {
    const int arity = pg.kind == GateKind::kUnary ? 1 : 2;
    int level = -1;
    for (int k = 0; k < arity; ++k) {
      level = std::max(level, last[static_cast<std::size_t>(pg.physical[static_cast<std::size_t>(k)])]);
    }
    if (pg.source >= 0) {
      for (int p : circuit.predecessors(pg.source)) {
        level = std::max(level, gate_level[static_cast<std::size_t>(p)]);
      }
    }
    ++level;
    for (int k = 0; k < arity; ++k) {
      last[static_cast<std::size_t>(pg.physical[static_cast<std::size_t>(k)])] = level;
    }
    if (pg.source >= 0) gate_level[static_cast<std::size_t>(pg.source)] = level;
    levels.push_back(level);
  }
  return levels;
}

long default_step_cap(std::size_t chunk_gates, int num_physical) {
  return 20L * static_cast<long>(chunk_gates) + 50L * num_physical;
}

// --- selection --------------------------------------------------------------

std::vector<double> selection_weights(std::span<const Candidate> candidates, const Arm& arm,
                                      double floor) {
  std::vector<double> weights(candidates.size(), 1.0);
  if (candidates.empty()) return weights;
  const auto [sum_lo, sum_hi] = std::minmax_element(
      candidates.begin(), candidates.end(),
      [](const Candidate& a, const Candidate& b) { return a.d_sum < b.d_sum; });
  const auto [min_lo, min_hi] = std::minmax_element(
      candidates.begin(), candidates.end(),
      [](const Candidate& a, const Candidate& b) { return a.d_min < b.d_min; });
  const double sum_base = sum_lo->d_sum;
  const double sum_range = static_cast<double>(sum_hi->d_sum) - sum_base;
  const double min_base = min_lo->d_min;
  const double min_range = static_cast<double>(min_hi->d_min) - min_base;

  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const double nsum = sum_range > 0 ? (candidates[i].d_sum - sum_base) / sum_range : 0.0;
    const double nmin = min_range > 0 ? (candidates[i].d_min - min_base) / min_range : 0.0;
    weights[i] = std::pow(1.0 - nsum + floor, arm.beta1) *
                 std::pow(1.0 - nmin + floor, arm.beta2);
  }
  return weights;
}

std::vector<double> selection_probabilities(std::span<const Candidate> candidates,
                                            const Arm& arm, double floor) {
  auto w = selection_weights(candidates, arm, floor);
  double total = 0.0;
  for (double x : w) total += x;
  for (double& x : w) x /= total;
  return w;
}

std::size_t roulette(std::span<const double> weights, Rng& rng) {
  double total = 0.0;
  for (double w : weights) total += w;
  const double target = uniform01(rng) * total;
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    if (target < acc) return i;
  }
  return weights.size() - 1;
}

std::size_t select_gate(std::span<const Candidate> candidates, const Arm& arm, Rng& rng,
                        double floor) {
  if (candidates.empty()) throw InternalError("roulette wheel on an empty candidate set");
  if (candidates.size() == 1) return 0;
  const auto weights = selection_weights(candidates, arm, floor);
  return roulette(weights, rng);
}

// --- chunk state ------------------------------------------------------------

ChunkState::ChunkState(const Circuit& chunk, const Topology& topology)
    : chunk_(&chunk), topology_(&topology) {
  for (const Edge& e : topology.swap_set()) {
    swap_a_.push_back(e.a);
    swap_b_.push_back(e.b);
  }
}

void ChunkState::reset(const Assignment& initial) {
  if (initial.num_logical() < chunk_->num_qubits() ||
      initial.num_physical() != topology_->num_qubits()) {
    throw ParameterError("initial assignment does not match the chunk and topology");
  }
  const std::size_t n = chunk_->size();
  initial_ = initial;
  assignment_ = initial;
  sequence_.clear();
  placed_.assign(n, 0);
  gate_level_.assign(n, -1);
  missing_preds_.resize(n);
  ready_.clear();
  front_.clear();
  front_sum_ = 0;
  front_gate_of_.assign(static_cast<std::size_t>(initial.num_logical()), -1);
  last_level_.assign(static_cast<std::size_t>(topology_->num_qubits()), -1);
  max_level_ = -1;
  swaps_ = 0;
  placed_originals_ = 0;
  for (std::size_t g = 0; g < n; ++g) {
    missing_preds_[g] = static_cast<int>(chunk_->predecessors(static_cast<int>(g)).size());
  }
  for (std::size_t g = 0; g < n; ++g) {
    if (missing_preds_[g] == 0) add_ready(static_cast<int>(g));
  }
}

void ChunkState::add_ready(int gate) {
  ready_.push_back(gate);
  const Gate& g = chunk_->gate(gate);
  if (g.kind != GateKind::kBinary) return;
  front_.add(gate, g.logical[0], g.logical[1]);
  front_sum_ += topology_->distance(assignment_.physical_of(g.logical[0]),
                                    assignment_.physical_of(g.logical[1]));
  front_gate_of_[static_cast<std::size_t>(g.logical[0])] = gate;
  front_gate_of_[static_cast<std::size_t>(g.logical[1])] = gate;
}

GateState ChunkState::state(int gate) const {
  if (missing_preds_[static_cast<std::size_t>(gate)] > 0) return GateState::kNotSupported;
  return executable(gate) ? GateState::kExecutable : GateState::kSupported;
}

bool ChunkState::executable(int gate) const {
  if (placed_[static_cast<std::size_t>(gate)] ||
      missing_preds_[static_cast<std::size_t>(gate)] > 0) {
    return false;
  }
  const Gate& g = chunk_->gate(gate);
  if (g.kind == GateKind::kUnary) return true;
  return topology_->adjacent(assignment_.physical_of(g.logical[0]),
                             assignment_.physical_of(g.logical[1]));
}

int ChunkState::compute_level(std::span<const int> physical, int gate) const {
  int level = -1;
  for (int p : physical) level = std::max(level, last_level_[static_cast<std::size_t>(p)]);
  if (gate >= 0) {
    for (int p : chunk_->predecessors(gate)) {
      level = std::max(level, gate_level_[static_cast<std::size_t>(p)]);
    }
  }
  return level + 1;
}

void ChunkState::record(PlacedGate pg) {
  const int arity = pg.kind == GateKind::kUnary ? 1 : 2;
  for (int k = 0; k < arity; ++k) {
    last_level_[static_cast<std::size_t>(pg.physical[static_cast<std::size_t>(k)])] = pg.level;
  }
  max_level_ = std::max(max_level_, pg.level);
  sequence_.push_back(pg);
}

void ChunkState::place_original(int gate) {
  if (!executable(gate)) {
    throw InternalError("gate " + std::to_string(gate) + " placed while not executable");
  }
  const Gate& g = chunk_->gate(gate);
  PlacedGate pg;
  pg.kind = g.kind;
  pg.source = gate;
  pg.physical[0] = assignment_.physical_of(g.logical[0]);
  if (g.kind == GateKind::kBinary) {
    pg.physical[1] = assignment_.physical_of(g.logical[1]);
    front_.remove(gate);
    front_sum_ -= topology_->distance(pg.physical[0], pg.physical[1]);
    front_gate_of_[static_cast<std::size_t>(g.logical[0])] = -1;
    front_gate_of_[static_cast<std::size_t>(g.logical[1])] = -1;
  }
  const int arity = g.arity();
  pg.level = compute_level(std::span<const int>(pg.physical.data(), static_cast<std::size_t>(arity)), gate);
  gate_level_[static_cast<std::size_t>(gate)] = pg.level;
  placed_[static_cast<std::size_t>(gate)] = 1;
  ++placed_originals_;
  ready_.erase(std::find(ready_.begin(), ready_.end(), gate));
  record(pg);
  for (int s : chunk_->successors(gate)) {
    if (--missing_preds_[static_cast<std::size_t>(s)] == 0) add_ready(s);
  }
}

void ChunkState::place_swap(int swap_index) {
  const int a = swap_a_[static_cast<std::size_t>(swap_index)];
  const int b = swap_b_[static_cast<std::size_t>(swap_index)];
  const int la = assignment_.logical_at(a);
  const int lb = assignment_.logical_at(b);
  int touched[2] = {-1, -1};
  if (la >= 0) touched[0] = front_gate_of_[static_cast<std::size_t>(la)];
  if (lb >= 0) touched[1] = front_gate_of_[static_cast<std::size_t>(lb)];
  if (touched[1] == touched[0]) touched[1] = -1;

  auto pair_distance = [&](int gate) {
    const Gate& g = chunk_->gate(gate);
    return topology_->distance(assignment_.physical_of(g.logical[0]),
                               assignment_.physical_of(g.logical[1]));
  };
  for (int t : touched) {
    if (t >= 0) front_sum_ -= pair_distance(t);
  }
  assignment_.swap_unchecked(a, b);
  for (int t : touched) {
    if (t >= 0) front_sum_ += pair_distance(t);
  }

  PlacedGate pg;
  pg.kind = GateKind::kSwap;
  pg.physical = {a, b};
  pg.level = compute_level(pg.physical, -1);
  ++swaps_;
  record(pg);
}

int ChunkState::front_min() const { return d_min(assignment_, front_, *topology_); }

CandidateSet ChunkState::candidates_sw() const {
  CandidateSet c;
  for (int g : ready_) {
    if (executable(g)) c.items.push_back({g, -1, 0, 0});
  }
  for (std::size_t k = 0; k < swap_a_.size(); ++k) {
    c.items.push_back({-1, static_cast<int>(k), 0, 0});
  }
  return c;
}

CandidateSet ChunkState::candidates_at_layer(int layer) const {
  CandidateSet c;
  c.layer = layer;
  auto free_at = [&](int p) { return last_level_[static_cast<std::size_t>(p)] < layer; };
  for (int g : ready_) {
    if (!executable(g)) continue;
    const Gate& gate = chunk_->gate(g);
    bool ok = true;
    for (int k = 0; k < gate.arity() && ok; ++k) {
      ok = free_at(assignment_.physical_of(gate.logical[static_cast<std::size_t>(k)]));
    }
    for (int p : chunk_->predecessors(g)) {
      if (!ok) break;
      ok = gate_level_[static_cast<std::size_t>(p)] <= layer - 1;
    }
    if (ok) c.items.push_back({g, -1, 0, 0});
  }
  for (std::size_t k = 0; k < swap_a_.size(); ++k) {
    if (free_at(swap_a_[k]) && free_at(swap_b_[k])) {
      c.items.push_back({-1, static_cast<int>(k), 0, 0});
    }
  }
  return c;
}

CandidateSet ChunkState::candidates_de(int& layer) const {
  for (;;) {
    CandidateSet c = candidates_at_layer(layer);
    if (!c.empty()) return c;
    ++layer;
  }
}

void ChunkState::evaluate(CandidateSet& candidates) const {
  const int total = front_sum_;
  const bool any_swap = std::any_of(candidates.items.begin(), candidates.items.end(),
                                    [](const Candidate& c) { return c.is_swap(); });
  std::vector<int> sums;
  std::vector<int> mins;
  if (any_swap) {
    std::vector<int> pa;
    std::vector<int> pb;
    pa.reserve(front_.size());
    pb.reserve(front_.size());
    for (const FrontPair& p : front_.pairs()) {
      pa.push_back(assignment_.physical_of(p.q0));
      pb.push_back(assignment_.physical_of(p.q1));
    }
    sums.resize(swap_a_.size());
    mins.resize(swap_a_.size());
    simd::score_swaps({pa, pb, swap_a_, swap_b_, topology_->distance_matrix(),
                       topology_->num_qubits(), sums, mins});
  }
  for (Candidate& c : candidates.items) {
    if (c.is_swap()) {
      c.d_sum = sums[static_cast<std::size_t>(c.swap)];
      c.d_min = mins[static_cast<std::size_t>(c.swap)];
    } else {
      c.d_sum = chunk_->gate(c.gate).kind == GateKind::kBinary ? total - 1 : total;
      c.d_min = 1;
    }
  }
}

void ChunkState::prune(CandidateSet& candidates, bool strict) const {
  const bool no_front = front_.empty();
  const int total = front_sum_;
  const int least = no_front ? kNoDistance : front_min();
  std::erase_if(candidates.items, [&](const Candidate& c) {
    if (!c.is_swap()) return false;
    if (no_front) return true;
    if (c.d_sum < total) return false;
    if (c.d_sum == total) return strict ? !(c.d_min < least) : c.d_min != least;
    return true;
  });
}

Solution ChunkState::solution() const {
  Solution s;
  s.placed = sequence_;
  s.initial = initial_;
  s.final_assignment = assignment_;
  s.swaps = swaps_;
  s.depth = max_level_;
  return s;
}

// --- generation -------------------------------------------------------------

namespace {

CandidateSet next_candidates(const ChunkState& state, Objective objective,
                             const GeneratorConfig& config, int& layer) {
  if (objective == Objective::kSwaps) {
    CandidateSet c = state.candidates_sw();
    state.evaluate(c);
    if (config.disable_prune) return c;
    CandidateSet full = c;
    state.prune(c, config.strict_prune);
    if (c.empty()) {
      full.fallback = true;
      return full;
    }
    return c;
  }

  for (;;) {
    CandidateSet c = state.candidates_de(layer);
    state.evaluate(c);
    if (config.disable_prune) return c;
    CandidateSet full = c;
    state.prune(c, config.strict_prune);
    if (!c.empty()) return c;
    // Pruning removed everything. On a layer that already holds gates, move
    // to a fresh one; on a fresh layer restore the unpruned swaps.
    if (layer > state.max_level()) {
      full.fallback = true;
      return full;
    }
    ++layer;
  }
}

void replay_prefix(ChunkState& state, const Topology& topology, const Solution& best) {
  const int threshold = best.depth / 2;
  for (const PlacedGate& pg : best.placed) {
    if (pg.level > threshold) continue;
    if (pg.kind == GateKind::kSwap) {
      state.place_swap(topology.edge_index(pg.physical[0], pg.physical[1]));
    } else {
      state.place_original(pg.source);
    }
  }
}

}  // namespace

GenerationResult generate_solution(const Circuit& chunk, const Topology& topology,
                                   Objective objective, const GeneratorConfig& config,
                                   const Assignment& initial, const Solution* best,
                                   UcbBandit& bandit, Rng& rng) {
  GenerationResult result;
  ChunkState state(chunk, topology);
  state.reset(initial);

  const bool restart = uniform01(rng) < config.restart_probability;
  if (restart && best != nullptr && !best->placed.empty()) {
    replay_prefix(state, topology, *best);
    result.restarted = true;
  }

  const long cap = config.step_cap.value_or(
      default_step_cap(chunk.size(), topology.num_qubits()));
  int layer = std::max(state.max_level(), 0);

  while (!state.complete()) {
    if (static_cast<long>(state.steps()) >= cap) {
      result.steps = static_cast<long>(state.steps());
      return result;
    }
    const CandidateSet c = next_candidates(state, objective, config, layer);
    if (c.fallback) ++result.fallbacks;
    const Arm& arm = bandit.pull();
    const Candidate& pick = c.items[select_gate(c.items, arm, rng, config.weight_floor)];
    if (pick.is_swap()) {
      state.place_swap(pick.swap);
    } else {
      state.place_original(pick.gate);
    }
    if (config.verify_incremental &&
        state.front_sum() != d_sum(state.assignment(), state.front(), topology)) {
      throw InternalError("incremental D_sum diverged from recomputation");
    }
  }
  result.steps = static_cast<long>(state.steps());
  result.solution = state.solution();
  return result;
}

}  // namespace dirsh
