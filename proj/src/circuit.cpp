#include "dirsh/circuit.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "dirsh/errors.hpp"

namespace dirsh {

Gate make_unary(std::string label, int qubit, std::string params) {
  Gate g;
  g.kind = GateKind::kUnary;
  g.label = std::move(label);
  g.params = std::move(params);
  g.logical = {qubit, -1};
  return g;
}

Gate make_binary(std::string label, int q0, int q1, std::string params) {
  Gate g;
  g.kind = GateKind::kBinary;
  g.label = std::move(label);
  g.params = std::move(params);
  g.logical = {q0, q1};
  return g;
}

namespace {

std::vector<std::vector<int>> adjacency(std::size_t n,
                                        std::span<const Precedence> edges,
                                        bool forward) {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [from, to] : edges) {
    if (forward) {
      adj[static_cast<std::size_t>(from)].push_back(to);
    } else {
      adj[static_cast<std::size_t>(to)].push_back(from);
    }
  }
  return adj;
}

void check_edge_range(std::size_t n, std::span<const Precedence> edges) {
  for (const auto& [from, to] : edges) {
    if (from < 0 || to < 0 || static_cast<std::size_t>(from) >= n ||
        static_cast<std::size_t>(to) >= n) {
      throw StructuralError("precedence edge (" + std::to_string(from) + ", " +
                            std::to_string(to) + ") references unknown gate");
    }
  }
}

// Returns a topological order (smallest id first among ready nodes), or
// throws with one edge that lies on a cycle.
std::vector<int> topological_order(std::size_t n,
                                   std::span<const Precedence> edges) {
  check_edge_range(n, edges);
  const auto succs = adjacency(n, edges, true);
  std::vector<int> indegree(n, 0);
  for (const auto& e : edges) ++indegree[static_cast<std::size_t>(e.second)];

  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push(static_cast<int>(v));
  }
  std::vector<int> order;
  order.reserve(n);
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int w : succs[static_cast<std::size_t>(v)]) {
      if (--indegree[static_cast<std::size_t>(w)] == 0) ready.push(w);
    }
  }
  if (order.size() == n) return order;

  // Every unprocessed node keeps an unprocessed predecessor; walking those
  // backwards must revisit a node, which closes a cycle.
  const auto preds = adjacency(n, edges, false);
  int v = -1;
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] > 0) {
      v = static_cast<int>(i);
      break;
    }
  }
  std::vector<char> seen(n, 0);
  while (!seen[static_cast<std::size_t>(v)]) {
    seen[static_cast<std::size_t>(v)] = 1;
    for (int p : preds[static_cast<std::size_t>(v)]) {
      if (indegree[static_cast<std::size_t>(p)] > 0) {
        v = p;
        break;
      }
    }
  }
  int u = v;
  for (int p : preds[static_cast<std::size_t>(v)]) {
    if (indegree[static_cast<std::size_t>(p)] > 0) {
      u = p;
      break;
    }
  }
  throw StructuralError("precedence cycle through edge (" + std::to_string(u) +
                        ", " + std::to_string(v) + ")");
}

}  // namespace

std::vector<int> compute_levels(std::size_t num_gates,
                                std::span<const Precedence> edges) {
  const auto order = topological_order(num_gates, edges);
  const auto preds = adjacency(num_gates, edges, false);
  std::vector<int> levels(num_gates, 0);
  for (int v : order) {
    int level = 0;
    for (int p : preds[static_cast<std::size_t>(v)]) {
      level = std::max(level, levels[static_cast<std::size_t>(p)] + 1);
    }
    levels[static_cast<std::size_t>(v)] = level;
  }
  return levels;
}

int depth_of(std::span<const int> levels) {
  if (levels.empty()) return kEmptyDepth;
  return *std::max_element(levels.begin(), levels.end());
}

Circuit::Circuit(int num_qubits, std::vector<Gate> gates,
                 std::span<const Precedence> precedence)
    : num_qubits_(num_qubits), gates_(std::move(gates)) {
  validate_gates();
  const std::size_t n = gates_.size();
  const auto order = topological_order(n, precedence);
  std::vector<int> position(n);
  for (std::size_t i = 0; i < n; ++i) {
    position[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  }

  std::vector<std::vector<int>> on_qubit(static_cast<std::size_t>(num_qubits_));
  for (int v : order) {
    const Gate& g = gates_[static_cast<std::size_t>(v)];
    for (int k = 0; k < g.arity(); ++k) {
      on_qubit[static_cast<std::size_t>(g.logical[static_cast<std::size_t>(k)])]
          .push_back(v);
    }
  }

  // Consecutive gates on a qubit must be ordered by reachability; otherwise
  // the relation leaves that qubit's order open.
  const auto succs = adjacency(n, precedence, true);
  std::vector<int> stamp(n, -1);
  int search = 0;
  auto reachable = [&](int from, int to) {
    ++search;
    std::vector<int> stack{from};
    stamp[static_cast<std::size_t>(from)] = search;
    const int limit = position[static_cast<std::size_t>(to)];
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : succs[static_cast<std::size_t>(v)]) {
        if (w == to) return true;
        if (stamp[static_cast<std::size_t>(w)] == search ||
            position[static_cast<std::size_t>(w)] > limit) {
          continue;
        }
        stamp[static_cast<std::size_t>(w)] = search;
        stack.push_back(w);
      }
    }
    return false;
  };

  std::vector<Precedence> normalized;
  for (std::size_t q = 0; q < on_qubit.size(); ++q) {
    const auto& seq = on_qubit[q];
    for (std::size_t i = 1; i < seq.size(); ++i) {
      if (!reachable(seq[i - 1], seq[i])) {
        throw StructuralError("gates " + std::to_string(seq[i - 1]) + " and " +
                              std::to_string(seq[i]) +
                              " share logical qubit " + std::to_string(q) +
                              " but are not ordered by precedence");
      }
      normalized.emplace_back(seq[i - 1], seq[i]);
    }
  }
  auto shares_qubit = [&](int a, int b) {
    const Gate& ga = gates_[static_cast<std::size_t>(a)];
    const Gate& gb = gates_[static_cast<std::size_t>(b)];
    for (int i = 0; i < ga.arity(); ++i) {
      for (int j = 0; j < gb.arity(); ++j) {
        if (ga.logical[static_cast<std::size_t>(i)] ==
            gb.logical[static_cast<std::size_t>(j)]) {
          return true;
        }
      }
    }
    return false;
  };
  for (const auto& e : precedence) {
    if (!shares_qubit(e.first, e.second)) normalized.push_back(e);
  }
  build(normalized);
}

Circuit Circuit::from_sequence(int num_qubits, std::vector<Gate> gates) {
  Circuit c;
  c.num_qubits_ = num_qubits;
  c.gates_ = std::move(gates);
  c.validate_gates();
  std::vector<int> last(static_cast<std::size_t>(num_qubits), -1);
  std::vector<Precedence> edges;
  for (std::size_t i = 0; i < c.gates_.size(); ++i) {
    const Gate& g = c.gates_[i];
    for (int k = 0; k < g.arity(); ++k) {
      int& prev = last[static_cast<std::size_t>(g.logical[static_cast<std::size_t>(k)])];
      if (prev >= 0) edges.emplace_back(prev, static_cast<int>(i));
      prev = static_cast<int>(i);
    }
  }
  c.build(edges);
  return c;
}

void Circuit::validate_gates() const {
  if (num_qubits_ < 0) throw StructuralError("negative qubit count");
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    if (g.kind == GateKind::kSwap) {
      throw StructuralError("gate " + std::to_string(i) +
                            ": inserted swaps cannot appear in a logical circuit");
    }
    for (int k = 0; k < g.arity(); ++k) {
      const int q = g.logical[static_cast<std::size_t>(k)];
      if (q < 0 || q >= num_qubits_) {
        throw StructuralError("gate " + std::to_string(i) + ": logical operand " +
                              std::to_string(q) + " outside [0, " +
                              std::to_string(num_qubits_) + ")");
      }
    }
    if (g.kind == GateKind::kBinary && g.logical[0] == g.logical[1]) {
      throw StructuralError("gate " + std::to_string(i) +
                            ": binary gate operands must be distinct");
    }
  }
}

void Circuit::build(std::span<const Precedence> edges) {
  const std::size_t n = gates_.size();
  num_binary_ = 0;
  for (std::size_t i = 0; i < n; ++i) {
    gates_[i].id = static_cast<int>(i);
    gates_[i].physical = {-1, -1};
    if (gates_[i].kind == GateKind::kBinary) ++num_binary_;
  }
  std::vector<Precedence> unique(edges.begin(), edges.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

  levels_ = compute_levels(n, unique);
  depth_ = depth_of(levels_);
  preds_.assign(n, {});
  succs_.assign(n, {});
  for (const auto& [from, to] : unique) {
    succs_[static_cast<std::size_t>(from)].push_back(to);
    preds_[static_cast<std::size_t>(to)].push_back(from);
  }
}

std::vector<Precedence> Circuit::precedence_edges() const {
  std::vector<Precedence> edges;
  for (std::size_t v = 0; v < succs_.size(); ++v) {
    for (int w : succs_[v]) edges.emplace_back(static_cast<int>(v), w);
  }
  return edges;
}

ChunkPlan split_chunks(const Circuit& circuit, int n_c) {
  if (n_c <= 0) {
    throw ParameterError("chunk count must be positive, got " +
                         std::to_string(n_c));
  }
  ChunkPlan plan;
  plan.requested = n_c;
  const int layers = circuit.depth() + 1;
  if (circuit.empty()) {
    plan.chunks.push_back(Circuit::from_sequence(circuit.num_qubits(), {}));
    plan.source_ids.emplace_back();
    plan.boundary_levels.push_back(0);
    return plan;
  }

  const int span = (layers + n_c - 1) / n_c;
  std::vector<std::vector<int>> bands(static_cast<std::size_t>(n_c));
  std::vector<int> band_of(circuit.size());
  for (std::size_t id = 0; id < circuit.size(); ++id) {
    const int band = std::min(circuit.level(static_cast<int>(id)) / span, n_c - 1);
    band_of[id] = band;
    bands[static_cast<std::size_t>(band)].push_back(static_cast<int>(id));
  }

  std::vector<int> local(circuit.size(), -1);
  for (int band = 0; band < n_c; ++band) {
    auto& ids = bands[static_cast<std::size_t>(band)];
    if (ids.empty()) continue;
    std::vector<Gate> gates;
    gates.reserve(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      local[static_cast<std::size_t>(ids[i])] = static_cast<int>(i);
      gates.push_back(circuit.gate(ids[i]));
    }
    std::vector<Precedence> edges;
    for (int id : ids) {
      for (int s : circuit.successors(id)) {
        if (band_of[static_cast<std::size_t>(s)] == band) {
          edges.emplace_back(local[static_cast<std::size_t>(id)],
                             local[static_cast<std::size_t>(s)]);
        }
      }
    }
    plan.chunks.emplace_back(circuit.num_qubits(), std::move(gates), edges);
    plan.boundary_levels.push_back(band * span);
    plan.source_ids.push_back(std::move(ids));
  }
  return plan;
}

}  // namespace dirsh
