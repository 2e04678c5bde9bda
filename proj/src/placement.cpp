#include "dirsh/placement.hpp"

#include <algorithm>
#include <string>

#include "dirsh/errors.hpp"

namespace dirsh {

Assignment Assignment::identity(int num_logical, int num_physical) {
  if (num_logical < 0 || num_logical > num_physical) {
    throw CapacityError("cannot place " + std::to_string(num_logical) +
                        " logical qubits on " + std::to_string(num_physical) +
                        " physical qubits");
  }
  Assignment a;
  a.forward_.resize(static_cast<std::size_t>(num_logical));
  a.inverse_.assign(static_cast<std::size_t>(num_physical), -1);
  for (int q = 0; q < num_logical; ++q) {
    a.forward_[static_cast<std::size_t>(q)] = q;
    a.inverse_[static_cast<std::size_t>(q)] = q;
  }
  return a;
}

Assignment Assignment::from_forward(std::vector<int> forward, int num_physical) {
  Assignment a;
  a.inverse_.assign(static_cast<std::size_t>(num_physical), -1);
  for (std::size_t q = 0; q < forward.size(); ++q) {
    const int p = forward[q];
    if (p < 0 || p >= num_physical) {
      throw ParameterError("logical qubit " + std::to_string(q) +
                           " mapped outside the machine");
    }
    if (a.inverse_[static_cast<std::size_t>(p)] >= 0) {
      throw ParameterError("physical qubit " + std::to_string(p) +
                           " assigned twice");
    }
    a.inverse_[static_cast<std::size_t>(p)] = static_cast<int>(q);
  }
  a.forward_ = std::move(forward);
  return a;
}

void Assignment::apply_swap(const Topology& topology, int a, int b) {
  if (topology.edge_index(a, b) < 0) {
    throw AdjacencyError("swap(" + std::to_string(a) + ", " + std::to_string(b) +
                         ") is not a coupling");
  }
  swap_unchecked(a, b);
}

void Assignment::swap_unchecked(int a, int b) {
  const int la = inverse_[static_cast<std::size_t>(a)];
  const int lb = inverse_[static_cast<std::size_t>(b)];
  inverse_[static_cast<std::size_t>(a)] = lb;
  inverse_[static_cast<std::size_t>(b)] = la;
  if (la >= 0) forward_[static_cast<std::size_t>(la)] = b;
  if (lb >= 0) forward_[static_cast<std::size_t>(lb)] = a;
}

Assignment default_assignment(int num_logical, const Topology& topology) {
  return Assignment::identity(num_logical, topology.num_qubits());
}

Assignment apply_swap(Assignment assignment, const Topology& topology, int a, int b) {
  assignment.apply_swap(topology, a, b);
  return assignment;
}

GateState classify(const Circuit& circuit, int id, std::span<const char> placed,
                   const Assignment& assignment, const Topology& topology) {
  for (int p : circuit.predecessors(id)) {
    if (!placed[static_cast<std::size_t>(p)]) return GateState::kNotSupported;
  }
  const Gate& g = circuit.gate(id);
  if (g.kind == GateKind::kUnary) return GateState::kExecutable;
  const int a = assignment.physical_of(g.logical[0]);
  const int b = assignment.physical_of(g.logical[1]);
  return topology.adjacent(a, b) ? GateState::kExecutable : GateState::kSupported;
}

bool FrontSet::remove(int gate) {
  const auto it = std::find_if(pairs_.begin(), pairs_.end(),
                               [gate](const FrontPair& p) { return p.gate == gate; });
  if (it == pairs_.end()) return false;
  *it = pairs_.back();
  pairs_.pop_back();
  return true;
}

int d_sum(const Assignment& assignment, const FrontSet& front, const Topology& topology) {
  int total = 0;
  for (const FrontPair& p : front.pairs()) {
    total += topology.distance(assignment.physical_of(p.q0), assignment.physical_of(p.q1));
  }
  return total;
}

int d_min(const Assignment& assignment, const FrontSet& front, const Topology& topology) {
  int best = kNoDistance;
  for (const FrontPair& p : front.pairs()) {
    best = std::min(best, topology.distance(assignment.physical_of(p.q0),
                                            assignment.physical_of(p.q1)));
  }
  return best;
}

}  // namespace dirsh
