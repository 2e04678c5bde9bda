#pragma once

#include <limits>
#include <span>
#include <vector>

#include "dirsh/circuit.hpp"
#include "dirsh/topology.hpp"

namespace dirsh {

/// Injective map from logical qubits to physical qubits, with its inverse.
class Assignment {
 public:
  Assignment() = default;

  /// Identity placement of `num_logical` qubits on `num_physical` nodes.
  static Assignment identity(int num_logical, int num_physical);

  /// Builds from an explicit forward map; throws ParameterError when it is not
  /// injective or out of range.
  static Assignment from_forward(std::vector<int> forward, int num_physical);

  int num_logical() const { return static_cast<int>(forward_.size()); }
  int num_physical() const { return static_cast<int>(inverse_.size()); }

  int physical_of(int logical) const {
    return forward_[static_cast<std::size_t>(logical)];
  }
  /// Logical qubit held by `physical`, or -1 when the node is empty.
  int logical_at(int physical) const {
    return inverse_[static_cast<std::size_t>(physical)];
  }

  std::span<const int> forward() const { return forward_; }
  std::span<const int> inverse() const { return inverse_; }

  /// Exchanges the contents of physical qubits a and b. Throws AdjacencyError
  /// when {a, b} is not a coupling of `topology`.
  void apply_swap(const Topology& topology, int a, int b);

  /// Same exchange without the adjacency check.
  void swap_unchecked(int a, int b);

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<int> forward_;
  std::vector<int> inverse_;
};

/// Identity placement; throws CapacityError when the circuit is wider than
/// the machine.
Assignment default_assignment(int num_logical, const Topology& topology);

/// Value-returning form of Assignment::apply_swap.
Assignment apply_swap(Assignment assignment, const Topology& topology, int a, int b);

enum class GateState { kNotSupported, kSupported, kExecutable };

/// Readiness of unplaced gate `id`. `placed[g]` flags the placed gates.
GateState classify(const Circuit& circuit, int id, std::span<const char> placed,
                   const Assignment& assignment, const Topology& topology);

/// Logical pair of a pending binary gate whose predecessors are all placed.
struct FrontPair {
  int gate = -1;
  int q0 = -1;
  int q1 = -1;
};

/// The set Q of ready binary gates, both executable and merely supported.
class FrontSet {
 public:
  void add(int gate, int q0, int q1) { pairs_.push_back({gate, q0, q1}); }
  /// Removes the pair of `gate`; returns false if it was absent.
  bool remove(int gate);
  void clear() { pairs_.clear(); }

  std::span<const FrontPair> pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

 private:
  std::vector<FrontPair> pairs_;
};

/// Sentinel returned by d_min on an empty front.
inline constexpr int kNoDistance = std::numeric_limits<int>::max();

/// Sum of physical distances over the front; 0 when empty.
int d_sum(const Assignment& assignment, const FrontSet& front, const Topology& topology);
/// Minimum physical distance over the front; kNoDistance when empty.
int d_min(const Assignment& assignment, const FrontSet& front, const Topology& topology);

}  // namespace dirsh
