#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dirsh {

/// Undirected coupling between two physical qubits, stored with a < b.
struct Edge {
  int a = 0;
  int b = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Hop-count distances between every pair of nodes, row-major n x n, via one
/// breadth-first search per source. Throws TopologyError listing the
/// connected components when the graph is disconnected.
std::vector<int> all_pairs_distance(int num_nodes, std::span<const Edge> edges);

/// Physical machine graph with cached all-pairs distances. Immutable.
///
/// The edge list doubles as the swap set: swap k acts on `edges()[k]`.
class Topology {
 public:
  /// Edges are unordered pairs; self-loops, out-of-range indices, and
  /// duplicates (in either orientation) are rejected.
  static Topology from_edges(int num_qubits,
                             std::span<const std::pair<int, int>> edges,
                             std::string name = {});

  int num_qubits() const { return num_qubits_; }
  const std::string& name() const { return name_; }

  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Edge> swap_set() const { return edges_; }
  std::span<const int> neighbors(int p) const {
    return neighbors_[static_cast<std::size_t>(p)];
  }

  int distance(int a, int b) const {
    return dist_[static_cast<std::size_t>(a * num_qubits_ + b)];
  }
  bool adjacent(int a, int b) const { return distance(a, b) == 1; }
  std::span<const int> distance_matrix() const { return dist_; }
  int diameter() const { return diameter_; }

  /// Index of edge {a, b} in `edges()`, or -1.
  int edge_index(int a, int b) const;

 private:
  Topology() = default;

  int num_qubits_ = 0;
  int diameter_ = 0;
  std::string name_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<int> dist_;
  std::vector<int> edge_index_;
};

/// Number of directed connections the builtin Tokyo graph is documented with.
inline constexpr int kTokyoDirectedConnections = 86;

/// IBM Q Tokyo: 20 qubits, 43 couplings (86 directed connections).
Topology builtin_tokyo();

Topology make_line(int n);
Topology make_ring(int n);
Topology make_grid(int rows, int cols);

}  // namespace dirsh
