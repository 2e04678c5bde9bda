#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dirsh {

enum class GateKind : unsigned char { kUnary, kBinary, kSwap };

/// A gate of the logical circuit, or a swap inserted by routing.
///
/// Unary and binary gates carry logical operands. Inserted swaps carry only
/// physical operands. `params` holds the raw parameter text of the source
/// instruction (e.g. "pi/2"), without the surrounding parentheses.
struct Gate {
  int id = 0;
  GateKind kind = GateKind::kUnary;
  std::string label;
  std::string params;
  std::array<int, 2> logical{-1, -1};
  std::array<int, 2> physical{-1, -1};

  int arity() const { return kind == GateKind::kUnary ? 1 : 2; }
};

Gate make_unary(std::string label, int qubit, std::string params = {});
Gate make_binary(std::string label, int q0, int q1, std::string params = {});

using Precedence = std::pair<int, int>;

/// Level map for a DAG on `num_gates` nodes: roots get 0, every other node
/// 1 + max level of its predecessors. Throws StructuralError naming an edge
/// on a cycle when the edge set is cyclic.
std::vector<int> compute_levels(std::size_t num_gates,
                                std::span<const Precedence> edges);

/// Depth of a level map: the maximum level, or kEmptyDepth for no gates.
inline constexpr int kEmptyDepth = -1;
int depth_of(std::span<const int> levels);

/// Logical circuit: gates over `num_qubits` logical qubits plus the
/// precedence relation between them. Immutable once built.
///
/// Gate ids are dense and equal to the gate's index. The stored precedence
/// is normalized: per logical qubit, each gate precedes the next gate on
/// that qubit, and extra edges between gates on disjoint qubits are kept.
class Circuit {
 public:
  Circuit() = default;

  /// General constructor. `precedence` may be the full per-qubit order or any
  /// relation whose reachability totally orders the gates of each qubit.
  Circuit(int num_qubits, std::vector<Gate> gates,
          std::span<const Precedence> precedence);

  /// Precedence is the per-qubit order of `gates` as listed (circuit order).
  static Circuit from_sequence(int num_qubits, std::vector<Gate> gates);

  int num_qubits() const { return num_qubits_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  std::size_t num_binary() const { return num_binary_; }

  const std::vector<Gate>& gates() const { return gates_; }
  const Gate& gate(int id) const { return gates_[static_cast<std::size_t>(id)]; }

  std::span<const int> predecessors(int id) const {
    return preds_[static_cast<std::size_t>(id)];
  }
  std::span<const int> successors(int id) const {
    return succs_[static_cast<std::size_t>(id)];
  }
  std::vector<Precedence> precedence_edges() const;

  const std::vector<int>& levels() const { return levels_; }
  int level(int id) const { return levels_[static_cast<std::size_t>(id)]; }
  int depth() const { return depth_; }

 private:
  void validate_gates() const;
  void build(std::span<const Precedence> edges);

  int num_qubits_ = 0;
  std::size_t num_binary_ = 0;
  std::vector<Gate> gates_;
  std::vector<std::vector<int>> preds_;
  std::vector<std::vector<int>> succs_;
  std::vector<int> levels_;
  int depth_ = kEmptyDepth;
};

/// Level-band partition of a circuit.
///
/// `chunks[j]` is a standalone circuit over the same logical qubits whose
/// gate i is gate `source_ids[j][i]` of the source circuit. Precedence edges
/// that cross chunks always point forward and are dropped from the fragment.
struct ChunkPlan {
  std::vector<Circuit> chunks;
  std::vector<std::vector<int>> source_ids;
  /// First source level of each chunk.
  std::vector<int> boundary_levels;
  int requested = 1;

  int effective() const { return static_cast<int>(chunks.size()); }
};

/// Splits into `n_c` bands of ceil(layers / n_c) levels each; the last band
/// takes all remaining levels. Empty bands are dropped.
ChunkPlan split_chunks(const Circuit& circuit, int n_c);

}  // namespace dirsh
