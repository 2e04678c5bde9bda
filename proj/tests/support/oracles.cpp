#include "oracles.hpp"

#include <algorithm>
#include <limits>

namespace dirsh::testing {

std::vector<int> floyd_warshall(int n, std::span<const std::pair<int, int>> edges) {
  std::vector<int> d(static_cast<std::size_t>(n * n), kInf);
  for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i * n + i)] = 0;
  for (const auto& [a, b] : edges) {
    d[static_cast<std::size_t>(a * n + b)] = 1;
    d[static_cast<std::size_t>(b * n + a)] = 1;
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const int via = d[static_cast<std::size_t>(i * n + k)] + d[static_cast<std::size_t>(k * n + j)];
        int& cur = d[static_cast<std::size_t>(i * n + j)];
        if (via < cur) cur = via;
      }
    }
  }
  return d;
}

std::vector<std::pair<int, int>> edge_pairs(const Topology& topology) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : topology.edges()) out.emplace_back(e.a, e.b);
  return out;
}

int brute_dsum(std::span<const int> forward, std::span<const std::pair<int, int>> pairs,
               std::span<const int> dist, int n) {
  int total = 0;
  for (const auto& [q0, q1] : pairs) {
    total += dist[static_cast<std::size_t>(forward[static_cast<std::size_t>(q0)] * n +
                                           forward[static_cast<std::size_t>(q1)])];
  }
  return total;
}

int brute_dmin(std::span<const int> forward, std::span<const std::pair<int, int>> pairs,
               std::span<const int> dist, int n) {
  int best = -1;
  for (const auto& [q0, q1] : pairs) {
    const int d = dist[static_cast<std::size_t>(forward[static_cast<std::size_t>(q0)] * n +
                                                forward[static_cast<std::size_t>(q1)])];
    if (best < 0 || d < best) best = d;
  }
  return best;
}

std::vector<int> relaxation_levels(int num_gates, std::span<const std::pair<int, int>> edges) {
  std::vector<int> level(static_cast<std::size_t>(num_gates), 0);
  for (int round = 0; round <= num_gates; ++round) {
    bool changed = false;
    for (const auto& [a, b] : edges) {
      const int want = level[static_cast<std::size_t>(a)] + 1;
      if (level[static_cast<std::size_t>(b)] < want) {
        level[static_cast<std::size_t>(b)] = want;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return level;
}

bool reaches(const Circuit& circuit, int a, int b) {
  std::vector<char> seen(circuit.size(), 0);
  std::vector<int> stack{a};
  while (!stack.empty()) {
    const int g = stack.back();
    stack.pop_back();
    for (int s : circuit.successors(g)) {
      if (s == b) return true;
      if (!seen[static_cast<std::size_t>(s)]) {
        seen[static_cast<std::size_t>(s)] = 1;
        stack.push_back(s);
      }
    }
  }
  return false;
}

std::vector<int> scan_levels(const Circuit& circuit, std::span<const PlacedGate> placed) {
  std::vector<int> level(placed.size(), 0);
  for (std::size_t i = 0; i < placed.size(); ++i) {
    const PlacedGate& g = placed[i];
    const int arity = g.kind == GateKind::kUnary ? 1 : 2;
    for (std::size_t j = 0; j < i; ++j) {
      const PlacedGate& h = placed[j];
      const int harity = h.kind == GateKind::kUnary ? 1 : 2;
      bool dep = false;
      for (int x = 0; x < arity; ++x) {
        for (int y = 0; y < harity; ++y) dep |= g.physical[static_cast<std::size_t>(x)] == h.physical[static_cast<std::size_t>(y)];
      }
      if (!dep && g.source >= 0 && h.source >= 0) dep = reaches(circuit, h.source, g.source);
      if (dep) level[i] = std::max(level[i], level[j] + 1);
    }
  }
  return level;
}

}  // namespace dirsh::testing
