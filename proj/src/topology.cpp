#include "dirsh/topology.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <string>

#include "dirsh/errors.hpp"

namespace dirsh {

std::vector<int> all_pairs_distance(int num_nodes, std::span<const Edge> edges) {
  const auto n = static_cast<std::size_t>(num_nodes);
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : edges) {
    adj[static_cast<std::size_t>(e.a)].push_back(e.b);
    adj[static_cast<std::size_t>(e.b)].push_back(e.a);
  }

  std::vector<int> dist(n * n, -1);
  std::deque<int> queue;
  for (std::size_t src = 0; src < n; ++src) {
    int* row = dist.data() + src * n;
    row[src] = 0;
    queue.assign(1, static_cast<int>(src));
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (row[w] < 0) {
          row[w] = row[v] + 1;
          queue.push_back(w);
        }
      }
    }
  }

  if (n > 0 && std::find(dist.begin(), dist.end(), -1) != dist.end()) {
    std::vector<int> component(n, -1);
    std::string listing;
    int count = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (component[v] >= 0) continue;
      listing += count ? " | {" : "{";
      bool first = true;
      for (std::size_t w = 0; w < n; ++w) {
        if (dist[v * n + w] >= 0) {
          component[w] = count;
          listing += (first ? "" : ",") + std::to_string(w);
          first = false;
        }
      }
      listing += "}";
      ++count;
    }
    throw TopologyError("coupling graph is disconnected; components: " + listing);
  }
  return dist;
}

Topology Topology::from_edges(int num_qubits,
                              std::span<const std::pair<int, int>> edges,
                              std::string name) {
  if (num_qubits <= 0) {
    throw TopologyError("coupling graph needs at least one qubit");
  }
  Topology t;
  t.num_qubits_ = num_qubits;
  t.name_ = std::move(name);
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= num_qubits || b >= num_qubits) {
      throw TopologyError("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                          ") outside [0, " + std::to_string(num_qubits) + ")");
    }
    if (a == b) {
      throw TopologyError("self-loop on qubit " + std::to_string(a));
    }
    t.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(t.edges_.begin(), t.edges_.end());
  const auto dup = std::adjacent_find(t.edges_.begin(), t.edges_.end());
  if (dup != t.edges_.end()) {
    throw TopologyError("duplicate edge (" + std::to_string(dup->a) + ", " +
                        std::to_string(dup->b) + ")");
  }

  const auto n = static_cast<std::size_t>(num_qubits);
  t.neighbors_.assign(n, {});
  t.edge_index_.assign(n * n, -1);
  for (std::size_t k = 0; k < t.edges_.size(); ++k) {
    const Edge& e = t.edges_[k];
    t.neighbors_[static_cast<std::size_t>(e.a)].push_back(e.b);
    t.neighbors_[static_cast<std::size_t>(e.b)].push_back(e.a);
    t.edge_index_[static_cast<std::size_t>(e.a) * n + static_cast<std::size_t>(e.b)] =
        static_cast<int>(k);
    t.edge_index_[static_cast<std::size_t>(e.b) * n + static_cast<std::size_t>(e.a)] =
        static_cast<int>(k);
  }
  for (auto& nb : t.neighbors_) std::sort(nb.begin(), nb.end());
  t.dist_ = all_pairs_distance(num_qubits, t.edges_);
  t.diameter_ = *std::max_element(t.dist_.begin(), t.dist_.end());
  return t;
}

int Topology::edge_index(int a, int b) const {
  if (a < 0 || b < 0 || a >= num_qubits_ || b >= num_qubits_) return -1;
  return edge_index_[static_cast<std::size_t>(a * num_qubits_ + b)];
}

Topology builtin_tokyo() {
  // Public ibmq_tokyo coupling map: a 4 x 5 grid plus crossing diagonals.
  static constexpr std::array<std::pair<int, int>, 43> kEdges{{
      {0, 1},   {0, 5},   {1, 2},   {1, 6},   {1, 7},   {2, 3},   {2, 6},
      {2, 7},   {3, 4},   {3, 8},   {3, 9},   {4, 8},   {4, 9},   {5, 6},
      {5, 10},  {5, 11},  {6, 7},   {6, 10},  {6, 11},  {7, 8},   {7, 12},
      {7, 13},  {8, 9},   {8, 12},  {8, 13},  {9, 14},  {10, 11}, {10, 15},
      {11, 12}, {11, 16}, {11, 17}, {12, 13}, {12, 16}, {12, 17}, {13, 14},
      {13, 18}, {13, 19}, {14, 18}, {14, 19}, {15, 16}, {16, 17}, {17, 18},
      {18, 19},
  }};
  return Topology::from_edges(20, kEdges, "tokyo");
}

Topology make_line(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Topology::from_edges(n, edges, "line-" + std::to_string(n));
}

Topology make_ring(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  if (n > 2) edges.emplace_back(n - 1, 0);
  return Topology::from_edges(n, edges, "ring-" + std::to_string(n));
}

Topology make_grid(int rows, int cols) {
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  }
  return Topology::from_edges(rows * cols, edges,
                              "grid-" + std::to_string(rows) + "x" + std::to_string(cols));
}

}  // namespace dirsh
