#include "dirsh/validation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dirsh/errors.hpp"

namespace dirsh {

std::string_view violation_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kGateCount:
      return "gate-count";
    case ViolationKind::kPrecedence:
      return "precedence";
    case ViolationKind::kAdjacency:
      return "adjacency";
    case ViolationKind::kSwapEdge:
      return "swap-edge";
    case ViolationKind::kQubitOrder:
      return "qubit-order";
    case ViolationKind::kMetrics:
      return "metrics";
    case ViolationKind::kLayering:
      return "layering";
    case ViolationKind::kMalformed:
      return "malformed";
  }
  return "unknown";
}

std::size_t ValidationReport::count(ViolationKind kind) const {
  return static_cast<std::size_t>(std::count_if(
      violations.begin(), violations.end(), [kind](const Violation& v) { return v.kind == kind; }));
}

std::string ValidationReport::to_text() const {
  if (violations.empty()) return "ok\n";
  std::ostringstream out;
  for (const Violation& v : violations) {
    out << violation_name(v.kind);
    if (v.position >= 0) out << " at #" << v.position;
    if (v.gate >= 0) out << " (gate " << v.gate << ")";
    out << ": " << v.message << '\n';
  }
  return out.str();
}

namespace {

int arity_of(const PlacedGate& pg) { return pg.kind == GateKind::kUnary ? 1 : 2; }

// Returns the first structural problem of placed gate `i`, or empty.
std::string malformed(const Circuit& circuit, const PlacedGate& pg, int num_physical) {
  for (int k = 0; k < arity_of(pg); ++k) {
    const int p = pg.physical[static_cast<std::size_t>(k)];
    if (p < 0 || p >= num_physical) return "physical operand " + std::to_string(p) + " out of range";
  }
  if (pg.kind == GateKind::kSwap) {
    if (pg.source >= 0) return "swap carries a source gate";
    if (pg.physical[0] == pg.physical[1]) return "swap on a single qubit";
    return {};
  }
  if (pg.source < 0 || static_cast<std::size_t>(pg.source) >= circuit.size()) {
    return "source gate " + std::to_string(pg.source) + " out of range";
  }
  if (circuit.gate(pg.source).kind != pg.kind) return "gate kind differs from source";
  return {};
}

std::vector<int> replay_levels(const Circuit& circuit, const Solution& solution,
                               int num_physical) {
  std::vector<int> last(static_cast<std::size_t>(num_physical), -1);
  std::vector<int> source_level(circuit.size(), -1);
  std::vector<int> levels;
  levels.reserve(solution.placed.size());
  for (const PlacedGate& pg : solution.placed) {
    int level = 0;
    for (int k = 0; k < arity_of(pg); ++k) {
      level = std::max(level, last[static_cast<std::size_t>(pg.physical[static_cast<std::size_t>(k)])] + 1);
    }
    if (pg.kind != GateKind::kSwap) {
      for (int p : circuit.predecessors(pg.source)) {
        if (source_level[static_cast<std::size_t>(p)] >= 0) {
          level = std::max(level, source_level[static_cast<std::size_t>(p)] + 1);
        }
      }
      source_level[static_cast<std::size_t>(pg.source)] = level;
    }
    for (int k = 0; k < arity_of(pg); ++k) {
      last[static_cast<std::size_t>(pg.physical[static_cast<std::size_t>(k)])] = level;
    }
    levels.push_back(level);
  }
  return levels;
}

}  // namespace

Metrics recompute_metrics(const Circuit& circuit, const Solution& solution, int num_physical) {
  for (std::size_t i = 0; i < solution.placed.size(); ++i) {
    const std::string problem = malformed(circuit, solution.placed[i], num_physical);
    if (!problem.empty()) {
      throw StructuralError("placed gate #" + std::to_string(i) + ": " + problem);
    }
  }
  Metrics m;
  m.swaps = static_cast<int>(std::count_if(
      solution.placed.begin(), solution.placed.end(),
      [](const PlacedGate& pg) { return pg.kind == GateKind::kSwap; }));
  const auto levels = replay_levels(circuit, solution, num_physical);
  m.depth = levels.empty() ? kEmptyDepth : *std::max_element(levels.begin(), levels.end());
  return m;
}

ValidationReport validate(const Circuit& circuit, const Topology& topology,
                          const Solution& solution) {
  std::vector<int> identity(static_cast<std::size_t>(circuit.num_qubits()));
  std::iota(identity.begin(), identity.end(), 0);
  return validate(circuit, topology, solution, identity);
}

ValidationReport validate(const Circuit& circuit, const Topology& topology,
                          const Solution& solution, std::span<const int> initial_forward) {
  ValidationReport report;
  auto add = [&](ViolationKind kind, int position, int gate, std::string msg) {
    report.violations.push_back({kind, position, gate, std::move(msg)});
  };
  const int num_physical = topology.num_qubits();

  // Structure first: later checks index with these operands.
  for (std::size_t i = 0; i < solution.placed.size(); ++i) {
    std::string problem = malformed(circuit, solution.placed[i], num_physical);
    if (!problem.empty()) {
      add(ViolationKind::kMalformed, static_cast<int>(i), solution.placed[i].source,
          std::move(problem));
    }
  }
  if (initial_forward.size() < static_cast<std::size_t>(circuit.num_qubits())) {
    add(ViolationKind::kMalformed, -1, -1, "initial assignment narrower than the circuit");
  }
  if (!report.ok()) return report;

  // Own assignment bookkeeping (logical <-> physical).
  std::vector<int> where(initial_forward.begin(), initial_forward.end());
  std::vector<int> holder(static_cast<std::size_t>(num_physical), -1);
  for (std::size_t q = 0; q < where.size(); ++q) {
    const int p = where[q];
    if (p < 0 || p >= num_physical || holder[static_cast<std::size_t>(p)] >= 0) {
      add(ViolationKind::kMalformed, -1, -1, "initial assignment is not injective");
      return report;
    }
    holder[static_cast<std::size_t>(p)] = static_cast<int>(q);
  }

  std::vector<int> position(circuit.size(), -1);
  std::vector<int> seen(circuit.size(), 0);
  for (std::size_t i = 0; i < solution.placed.size(); ++i) {
    const PlacedGate& pg = solution.placed[i];
    const int at = static_cast<int>(i);
    if (pg.kind == GateKind::kSwap) {
      const int a = pg.physical[0];
      const int b = pg.physical[1];
      if (topology.distance(a, b) != 1) {
        add(ViolationKind::kSwapEdge, at, -1,
            "swap(" + std::to_string(a) + ", " + std::to_string(b) + ") is not a coupling");
      }
      const int la = holder[static_cast<std::size_t>(a)];
      const int lb = holder[static_cast<std::size_t>(b)];
      holder[static_cast<std::size_t>(a)] = lb;
      holder[static_cast<std::size_t>(b)] = la;
      if (la >= 0) where[static_cast<std::size_t>(la)] = b;
      if (lb >= 0) where[static_cast<std::size_t>(lb)] = a;
      continue;
    }

    const Gate& g = circuit.gate(pg.source);
    if (seen[static_cast<std::size_t>(pg.source)]++ == 0) {
      position[static_cast<std::size_t>(pg.source)] = at;
    }
    for (int k = 0; k < g.arity(); ++k) {
      const int expected = where[static_cast<std::size_t>(g.logical[static_cast<std::size_t>(k)])];
      if (pg.physical[static_cast<std::size_t>(k)] != expected) {
        add(ViolationKind::kAdjacency, at, pg.source,
            "operand " + std::to_string(k) + " placed on physical " +
                std::to_string(pg.physical[static_cast<std::size_t>(k)]) +
                " but logical qubit " + std::to_string(g.logical[static_cast<std::size_t>(k)]) +
                " sits on " + std::to_string(expected));
      }
    }
    if (g.kind == GateKind::kBinary) {
      const int a = where[static_cast<std::size_t>(g.logical[0])];
      const int b = where[static_cast<std::size_t>(g.logical[1])];
      if (topology.distance(a, b) != 1) {
        add(ViolationKind::kAdjacency, at, pg.source,
            "binary gate on physical " + std::to_string(a) + " and " + std::to_string(b) +
                " at distance " + std::to_string(topology.distance(a, b)));
      }
    }
  }

  // (a) every original exactly once
  for (std::size_t g = 0; g < circuit.size(); ++g) {
    if (seen[g] != 1) {
      add(ViolationKind::kGateCount, -1, static_cast<int>(g),
          "placed " + std::to_string(seen[g]) + " times");
    }
  }

  // (b) precedence edges in placement order
  for (const auto& [from, to] : circuit.precedence_edges()) {
    const int pf = position[static_cast<std::size_t>(from)];
    const int pt = position[static_cast<std::size_t>(to)];
    if (pf >= 0 && pt >= 0 && pf > pt) {
      add(ViolationKind::kPrecedence, pt, to,
          "placed before its predecessor " + std::to_string(from));
    }
  }

  // (e) per-qubit order matches circuit order
  std::vector<std::vector<int>> circuit_order(static_cast<std::size_t>(circuit.num_qubits()));
  std::vector<std::vector<int>> placed_order(static_cast<std::size_t>(circuit.num_qubits()));
  for (const Gate& g : circuit.gates()) {
    for (int k = 0; k < g.arity(); ++k) {
      circuit_order[static_cast<std::size_t>(g.logical[static_cast<std::size_t>(k)])].push_back(g.id);
    }
  }
  for (auto& seq : circuit_order) {
    std::stable_sort(seq.begin(), seq.end(),
                     [&](int a, int b) { return circuit.level(a) < circuit.level(b); });
  }
  for (const PlacedGate& pg : solution.placed) {
    if (pg.kind == GateKind::kSwap) continue;
    const Gate& g = circuit.gate(pg.source);
    for (int k = 0; k < g.arity(); ++k) {
      placed_order[static_cast<std::size_t>(g.logical[static_cast<std::size_t>(k)])].push_back(g.id);
    }
  }
  for (std::size_t q = 0; q < circuit_order.size(); ++q) {
    if (circuit_order[q] != placed_order[q]) {
      add(ViolationKind::kQubitOrder, -1, -1,
          "gates on logical qubit " + std::to_string(q) + " are not in circuit order");
    }
  }

  // (f) metrics, (g) layering
  const Metrics m = recompute_metrics(circuit, solution, num_physical);
  if (m.swaps != solution.swaps) {
    add(ViolationKind::kMetrics, -1, -1,
        "recorded " + std::to_string(solution.swaps) + " swaps, counted " +
            std::to_string(m.swaps));
  }
  if (m.depth != solution.depth) {
    add(ViolationKind::kMetrics, -1, -1,
        "recorded depth " + std::to_string(solution.depth) + ", recomputed " +
            std::to_string(m.depth));
  }
  const auto levels = replay_levels(circuit, solution, num_physical);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (solution.placed[i].level != levels[i]) {
      add(ViolationKind::kLayering, static_cast<int>(i), solution.placed[i].source,
          "recorded level " + std::to_string(solution.placed[i].level) + ", recomputed " +
              std::to_string(levels[i]));
    }
  }
  return report;
}

}  // namespace dirsh
