#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dirsh/optimizer.hpp"
#include "dirsh/topology.hpp"

namespace dirsh {

/// Coupling-map JSON:
///
///   {"num_qubits": 20, "edges": [[0, 1], [0, 5], ...], "name": "tokyo"}
///
/// "name" is optional. Duplicate edges are rejected (TopologyError); a
/// malformed document raises ParseError. A map named "tokyo" whose directed
/// connection count differs from the builtin's appends a line to `warnings`.
Topology parse_coupling_json(std::string_view text,
                             std::vector<std::string>* warnings = nullptr);

/// "tokyo" or a path to a coupling-map file.
Topology load_coupling(const std::string& spec, std::vector<std::string>* warnings = nullptr);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

/// One routing run, serialized as a single JSON line with keys in the order
/// instance, objective, seed, budget_seconds, n_c, swaps, depth, layers,
/// generations, discards, wall_seconds.
struct StatsRecord {
  std::string instance;
  Objective objective = Objective::kSwaps;
  std::uint64_t seed = 0;
  double budget_seconds = 0.0;
  int n_c = 1;
  int swaps = 0;
  int depth = kEmptyDepth;
  int layers = 0;
  long generations = 0;
  long discards = 0;
  /// Unset in generation-budget runs, which are reproducible byte for byte.
  std::optional<double> wall_seconds;

  std::string to_json_line() const;
  static StatsRecord from_json_line(std::string_view line);
};

StatsRecord make_stats(const std::string& instance, const RunConfig& config,
                       const RunReport& report);

}  // namespace dirsh
