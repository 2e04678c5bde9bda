#include "dirsh/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dirsh/errors.hpp"

namespace dirsh {

using ordered_json = nlohmann::ordered_json;

Topology parse_coupling_json(std::string_view text, std::vector<std::string>* warnings) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("coupling map: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("num_qubits") || !doc.contains("edges") ||
      !doc["num_qubits"].is_number_integer() || !doc["edges"].is_array()) {
    throw ParseError(0, "coupling map needs integer \"num_qubits\" and array \"edges\"");
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw ParseError(0, "each coupling edge must be a pair of integers");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError(0, "coupling map \"name\" must be a string");
    name = doc["name"].get<std::string>();
  }
  Topology t = Topology::from_edges(doc["num_qubits"].get<int>(), edges, name);
  if (name == "tokyo" && 2 * static_cast<int>(t.edges().size()) != kTokyoDirectedConnections &&
      warnings != nullptr) {
    warnings->push_back("coupling map named tokyo has " +
                        std::to_string(2 * t.edges().size()) + " directed connections, expected " +
                        std::to_string(kTokyoDirectedConnections));
  }
  return t;
}

Topology load_coupling(const std::string& spec, std::vector<std::string>* warnings) {
  if (spec == "tokyo") return builtin_tokyo();
  return parse_coupling_json(read_file(spec), warnings);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParameterError("cannot write " + path);
  out << content;
}

std::string StatsRecord::to_json_line() const {
  ordered_json j;
  j["instance"] = instance;
  j["objective"] = std::string(objective_name(objective));
  j["seed"] = seed;
  j["budget_seconds"] = budget_seconds;
  j["n_c"] = n_c;
  j["swaps"] = swaps;
  j["depth"] = depth;
  j["layers"] = layers;
  j["generations"] = generations;
  j["discards"] = discards;
  j["wall_seconds"] = wall_seconds ? ordered_json(*wall_seconds) : ordered_json(nullptr);
  return j.dump();
}

StatsRecord StatsRecord::from_json_line(std::string_view line) {
  const auto j = nlohmann::json::parse(line);
  StatsRecord r;
  r.instance = j.at("instance").get<std::string>();
  const auto obj = parse_objective(j.at("objective").get<std::string>());
  if (!obj) throw ParseError(0, "unknown objective in stats record");
  r.objective = *obj;
  r.seed = j.at("seed").get<std::uint64_t>();
  r.budget_seconds = j.at("budget_seconds").get<double>();
  r.n_c = j.at("n_c").get<int>();
  r.swaps = j.at("swaps").get<int>();
  r.depth = j.at("depth").get<int>();
  r.layers = j.at("layers").get<int>();
  r.generations = j.at("generations").get<long>();
  r.discards = j.at("discards").get<long>();
  if (!j.at("wall_seconds").is_null()) r.wall_seconds = j.at("wall_seconds").get<double>();
  return r;
}

StatsRecord make_stats(const std::string& instance, const RunConfig& config,
                       const RunReport& report) {
  StatsRecord r;
  r.instance = instance;
  r.objective = config.objective;
  r.seed = config.seed;
  r.budget_seconds = config.time_budget_seconds;
  r.n_c = report.effective_chunks;
  r.swaps = report.solution.swaps;
  r.depth = report.solution.depth;
  r.layers = report.solution.layers();
  r.generations = report.generations();
  r.discards = report.discards();
  if (!config.max_generations) r.wall_seconds = report.wall_seconds;
  return r;
}

}  // namespace dirsh
