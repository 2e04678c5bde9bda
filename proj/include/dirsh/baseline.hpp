#pragma once

#include <optional>

#include "dirsh/circuit.hpp"
#include "dirsh/generator.hpp"
#include "dirsh/topology.hpp"

namespace dirsh {

/// Deterministic reference router. Gates are taken in (level, id) order; a
/// binary gate whose operands are not adjacent first walks its first operand
/// along a shortest path (lowest-index next hop) until they are.
/// Starts from the identity assignment. Throws CapacityError.
Solution greedy_route(const Circuit& circuit, const Topology& topology);

/// Size limits accepted by exhaustive_optimal.
struct ExhaustiveLimits {
  static constexpr int kMaxPhysical = 5;
  static constexpr int kMaxBinary = 4;
  static constexpr int kMaxSwapCap = 4;
  static constexpr int kMaxGates = 12;
};

/// Optimal objective value over all routings that insert at most `swap_cap`
/// swaps, found by iterative deepening (on swap count, or on depth). Returns
/// nullopt when no routing within the cap exists. Throws ParameterError when
/// the instance exceeds ExhaustiveLimits. Starts from the identity assignment.
std::optional<int> exhaustive_optimal(const Circuit& circuit, const Topology& topology,
                                      Objective objective, int swap_cap);

}  // namespace dirsh
