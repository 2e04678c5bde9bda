#include "dirsh/baseline.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "dirsh/errors.hpp"
#include "dirsh/placement.hpp"

namespace dirsh {

Solution greedy_route(const Circuit& circuit, const Topology& topology) {
  Assignment sigma = default_assignment(circuit.num_qubits(), topology);
  Solution s;
  s.initial = sigma;

  std::vector<int> order(circuit.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return circuit.level(a) < circuit.level(b); });

  for (int id : order) {
    const Gate& g = circuit.gate(id);
    if (g.kind == GateKind::kBinary) {
      for (;;) {
        const int from = sigma.physical_of(g.logical[0]);
        const int to = sigma.physical_of(g.logical[1]);
        const int d = topology.distance(from, to);
        if (d <= 1) break;
        int hop = -1;
        for (int n : topology.neighbors(from)) {
          if (topology.distance(n, to) == d - 1) {
            hop = n;
            break;
          }
        }
        sigma.apply_swap(topology, from, hop);
        PlacedGate pg;
        pg.kind = GateKind::kSwap;
        pg.physical = {std::min(from, hop), std::max(from, hop)};
        s.placed.push_back(pg);
        ++s.swaps;
      }
    }
    PlacedGate pg;
    pg.kind = g.kind;
    pg.source = id;
    pg.physical[0] = sigma.physical_of(g.logical[0]);
    if (g.kind == GateKind::kBinary) pg.physical[1] = sigma.physical_of(g.logical[1]);
    s.placed.push_back(pg);
  }

  const auto levels = assign_levels(circuit, s.placed, topology.num_qubits());
  for (std::size_t i = 0; i < levels.size(); ++i) s.placed[i].level = levels[i];
  s.depth = depth_of(levels);
  s.final_assignment = sigma;
  return s;
}

namespace {

// Depth-first search state shared by both objectives.
class Search {
 public:
  Search(const Circuit& circuit, const Topology& topology)
      : circuit_(circuit), topology_(topology) {
    sigma_ = Assignment::identity(circuit.num_qubits(), topology.num_qubits());
  }

  // Can the circuit be completed with at most `swaps_left` more swaps?
  bool swaps_feasible(unsigned mask, int swaps_left) {
    mask = place_all_executable(mask);
    if (mask == full()) return true;
    if (swaps_left == 0) return false;
    const std::string key = key_of(mask, {});
    auto [it, fresh] = best_failed_.try_emplace(key, -1);
    if (!fresh && it->second >= swaps_left) return false;
    for (const Edge& e : topology_.swap_set()) {
      sigma_.swap_unchecked(e.a, e.b);
      const bool ok = swaps_feasible(mask, swaps_left - 1);
      sigma_.swap_unchecked(e.a, e.b);
      if (ok) return true;
    }
    it = best_failed_.find(key);
    it->second = std::max(it->second, swaps_left);
    return false;
  }

  // Can the circuit be completed with every level <= depth_limit and at most
  // `swaps_left` more swaps? `last` holds the level of the last gate on each
  // physical qubit, `gate_level` the level of each placed gate.
  bool depth_feasible(unsigned mask, int swaps_left, int depth_limit, std::vector<int>& last,
                      std::vector<int>& gate_level) {
    if (mask == full()) return true;
    std::vector<int> state = last;
    state.insert(state.end(), gate_level.begin(), gate_level.end());
    state.push_back(swaps_left);
    const std::string key = key_of(mask, state);
    if (failed_.count(key)) return false;

    for (std::size_t g = 0; g < circuit_.size(); ++g) {
      if (!ready(mask, static_cast<int>(g)) || !executable(static_cast<int>(g))) continue;
      const Gate& gate = circuit_.gate(static_cast<int>(g));
      int phys[2] = {sigma_.physical_of(gate.logical[0]),
                     gate.kind == GateKind::kBinary ? sigma_.physical_of(gate.logical[1]) : -1};
      int level = -1;
      for (int k = 0; k < gate.arity(); ++k) level = std::max(level, last[static_cast<std::size_t>(phys[k])]);
      for (int p : circuit_.predecessors(static_cast<int>(g))) {
        level = std::max(level, gate_level[static_cast<std::size_t>(p)]);
      }
      ++level;
      if (level > depth_limit) continue;
      int saved[2] = {-1, -1};
      for (int k = 0; k < gate.arity(); ++k) {
        saved[k] = last[static_cast<std::size_t>(phys[k])];
        last[static_cast<std::size_t>(phys[k])] = level;
      }
      gate_level[g] = level;
      const bool ok =
          depth_feasible(mask | (1u << g), swaps_left, depth_limit, last, gate_level);
      gate_level[g] = -1;
      for (int k = gate.arity() - 1; k >= 0; --k) last[static_cast<std::size_t>(phys[k])] = saved[k];
      if (ok) return true;
    }
    if (swaps_left > 0) {
      for (const Edge& e : topology_.swap_set()) {
        const int level = std::max(last[static_cast<std::size_t>(e.a)],
                                   last[static_cast<std::size_t>(e.b)]) + 1;
        if (level > depth_limit) continue;
        const int sa = last[static_cast<std::size_t>(e.a)];
        const int sb = last[static_cast<std::size_t>(e.b)];
        last[static_cast<std::size_t>(e.a)] = level;
        last[static_cast<std::size_t>(e.b)] = level;
        sigma_.swap_unchecked(e.a, e.b);
        const bool ok = depth_feasible(mask, swaps_left - 1, depth_limit, last, gate_level);
        sigma_.swap_unchecked(e.a, e.b);
        last[static_cast<std::size_t>(e.a)] = sa;
        last[static_cast<std::size_t>(e.b)] = sb;
        if (ok) return true;
      }
    }
    failed_.insert(key);
    return false;
  }

  void clear_memo() {
    best_failed_.clear();
    failed_.clear();
  }

 private:
  unsigned full() const { return (1u << circuit_.size()) - 1u; }

  bool ready(unsigned mask, int g) const {
    if (mask & (1u << g)) return false;
    for (int p : circuit_.predecessors(g)) {
      if (!(mask & (1u << p))) return false;
    }
    return true;
  }

  bool executable(int g) const {
    const Gate& gate = circuit_.gate(g);
    if (gate.kind == GateKind::kUnary) return true;
    return topology_.adjacent(sigma_.physical_of(gate.logical[0]),
                              sigma_.physical_of(gate.logical[1]));
  }

  // Placing an executable gate never costs a swap, so for swap counting the
  // closure under "place everything executable" loses nothing.
  unsigned place_all_executable(unsigned mask) const {
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t g = 0; g < circuit_.size(); ++g) {
        if (ready(mask, static_cast<int>(g)) && executable(static_cast<int>(g))) {
          mask |= 1u << g;
          progress = true;
        }
      }
    }
    return mask;
  }

  std::string key_of(unsigned mask, const std::vector<int>& extra) const {
    std::string key(reinterpret_cast<const char*>(&mask), sizeof(mask));
    for (int p : sigma_.inverse()) key.push_back(static_cast<char>(p));
    for (int v : extra) key.push_back(static_cast<char>(v));
    return key;
  }

  const Circuit& circuit_;
  const Topology& topology_;
  Assignment sigma_;
  std::unordered_map<std::string, int> best_failed_;
  std::unordered_set<std::string> failed_;
};

}  // namespace

std::optional<int> exhaustive_optimal(const Circuit& circuit, const Topology& topology,
                                      Objective objective, int swap_cap) {
  if (topology.num_qubits() > ExhaustiveLimits::kMaxPhysical ||
      static_cast<int>(circuit.num_binary()) > ExhaustiveLimits::kMaxBinary ||
      static_cast<int>(circuit.size()) > ExhaustiveLimits::kMaxGates || swap_cap < 0 ||
      swap_cap > ExhaustiveLimits::kMaxSwapCap) {
    throw ParameterError(
        "exhaustive search limited to 5 physical qubits, 4 binary gates, 12 gates and a "
        "swap cap of 4");
  }
  if (circuit.num_qubits() > topology.num_qubits()) {
    throw CapacityError("circuit wider than the machine");
  }
  Search search(circuit, topology);
  if (objective == Objective::kSwaps) {
    for (int k = 0; k <= swap_cap; ++k) {
      search.clear_memo();
      if (search.swaps_feasible(0u, k)) return k;
    }
    return std::nullopt;
  }

  if (circuit.empty()) return kEmptyDepth;
  const int upper = static_cast<int>(circuit.size()) + swap_cap;
  for (int limit = circuit.depth(); limit <= upper; ++limit) {
    search.clear_memo();
    std::vector<int> last(static_cast<std::size_t>(topology.num_qubits()), -1);
    std::vector<int> gate_level(circuit.size(), -1);
    if (search.depth_feasible(0u, swap_cap, limit, last, gate_level)) return limit;
  }
  return std::nullopt;
}

}  // namespace dirsh
