#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dirsh/circuit.hpp"
#include "dirsh/generator.hpp"
#include "dirsh/topology.hpp"

namespace dirsh {

// Independent feasibility checker. Works from the problem definition alone:
// replays the placed sequence with its own assignment bookkeeping and level
// recomputation, sharing nothing with the generator's heuristics.

enum class ViolationKind {
  kGateCount,     // an original gate missing or placed more than once
  kPrecedence,    // a precedence edge placed out of order
  kAdjacency,     // binary gate on non-adjacent qubits, or wrong physical operands
  kSwapEdge,      // swap on a pair that is not a coupling
  kQubitOrder,    // per-qubit gate order differs from circuit order
  kMetrics,       // recorded swap count or depth differs from the recount
  kLayering,      // recorded levels do not respect dependencies
  kMalformed,     // operand or gate index out of range
};

std::string_view violation_name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  /// Index into Solution::placed, or -1 when not tied to a position.
  int position = -1;
  /// Source gate id, or -1.
  int gate = -1;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::size_t count(ViolationKind kind) const;
  /// One line per violation; "ok" when there are none.
  std::string to_text() const;
};

struct Metrics {
  int swaps = 0;
  int depth = kEmptyDepth;

  friend bool operator==(const Metrics&, const Metrics&) = default;
};

/// Swap count and depth recomputed from the placed sequence. A gate depends
/// on the previous gates touching its physical qubits and on its precedence
/// predecessors. Throws StructuralError on out-of-range indices.
Metrics recompute_metrics(const Circuit& circuit, const Solution& solution,
                          int num_physical);

/// Checks `solution` against `circuit` on `topology`, replaying from the
/// identity assignment.
ValidationReport validate(const Circuit& circuit, const Topology& topology,
                          const Solution& solution);

/// Same, replaying from `initial_forward` (logical -> physical).
ValidationReport validate(const Circuit& circuit, const Topology& topology,
                          const Solution& solution, std::span<const int> initial_forward);

}  // namespace dirsh
