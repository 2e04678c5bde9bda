#include "instances.hpp"

#include <algorithm>
#include <numeric>

namespace dirsh::testing {

namespace {

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

Circuit random_circuit(int num_qubits, int num_gates, double binary_fraction, Rng& rng) {
  static const char* const kUnary[] = {"h", "x", "t", "s", "tdg"};
  std::vector<Gate> gates;
  gates.reserve(static_cast<std::size_t>(num_gates));
  for (int i = 0; i < num_gates; ++i) {
    if (num_qubits >= 2 && uniform01(rng) < binary_fraction) {
      const int a = uniform_int(rng, 0, num_qubits - 1);
      int b = uniform_int(rng, 0, num_qubits - 2);
      if (b >= a) ++b;
      gates.push_back(make_binary("cx", a, b));
    } else {
      gates.push_back(make_unary(kUnary[uniform_int(rng, 0, 4)], uniform_int(rng, 0, num_qubits - 1)));
    }
  }
  return Circuit::from_sequence(num_qubits, std::move(gates));
}

Circuit random_binary_circuit(int num_qubits, int num_gates, Rng& rng) {
  return random_circuit(num_qubits, num_gates, 1.0, rng);
}

std::vector<NamedTopology> standard_topologies() {
  return {{"path5", make_line(5)},
          {"ring6", make_ring(6)},
          {"grid3x3", make_grid(3, 3)},
          {"tokyo", builtin_tokyo()}};
}

std::vector<int> random_forward(int num_logical, int num_physical, Rng& rng) {
  std::vector<int> nodes(static_cast<std::size_t>(num_physical));
  std::iota(nodes.begin(), nodes.end(), 0);
  std::shuffle(nodes.begin(), nodes.end(), rng);
  nodes.resize(static_cast<std::size_t>(num_logical));
  return nodes;
}

}  // namespace dirsh::testing
