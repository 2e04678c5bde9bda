#pragma once

// Straightforward reference computations used to cross-check the library.
// None of them call into the code under test beyond plain data accessors.

#include <span>
#include <utility>
#include <vector>

#include "dirsh/circuit.hpp"
#include "dirsh/generator.hpp"
#include "dirsh/topology.hpp"

namespace dirsh::testing {

inline constexpr int kInf = 1 << 28;

/// Floyd-Warshall over unit-weight undirected edges; kInf when unreachable.
std::vector<int> floyd_warshall(int n, std::span<const std::pair<int, int>> edges);

/// Edge list of a topology as plain pairs.
std::vector<std::pair<int, int>> edge_pairs(const Topology& topology);

/// Sum / min of dist over logical pairs under `forward`; min of none is -1.
int brute_dsum(std::span<const int> forward, std::span<const std::pair<int, int>> pairs,
               std::span<const int> dist, int n);
int brute_dmin(std::span<const int> forward, std::span<const std::pair<int, int>> pairs,
               std::span<const int> dist, int n);

/// Longest-path levels by repeated relaxation over explicit edges.
std::vector<int> relaxation_levels(int num_gates, std::span<const std::pair<int, int>> edges);

/// Levels of a routed sequence by quadratic scan: a gate depends on every
/// earlier gate sharing a physical qubit and on earlier gates that are its
/// transitive predecessors in the circuit.
std::vector<int> scan_levels(const Circuit& circuit, std::span<const PlacedGate> placed);

/// True when `a` reaches `b` in the circuit's precedence relation.
bool reaches(const Circuit& circuit, int a, int b);

}  // namespace dirsh::testing
