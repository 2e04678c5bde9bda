#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dirsh/circuit.hpp"
#include "dirsh/generator.hpp"
#include "dirsh/topology.hpp"

namespace dirsh::testing {

/// Random circuit in circuit order: each gate is binary with probability
/// `binary_fraction`, operands uniform over distinct qubits.
Circuit random_circuit(int num_qubits, int num_gates, double binary_fraction, Rng& rng);

/// Circuit of binary gates only.
Circuit random_binary_circuit(int num_qubits, int num_gates, Rng& rng);

/// Named machine graph: "path5", "ring6", "grid3x3", "tokyo".
struct NamedTopology {
  std::string name;
  Topology topology;
};
std::vector<NamedTopology> standard_topologies();

/// Random injective placement of `num_logical` qubits on the machine.
std::vector<int> random_forward(int num_logical, int num_physical, Rng& rng);

}  // namespace dirsh::testing
