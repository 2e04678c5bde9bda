// dirsh: route a circuit, or benchmark a set of circuits against reference values.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dirsh/baseline.hpp"
#include "dirsh/bench.hpp"
#include "dirsh/errors.hpp"
#include "dirsh/io.hpp"
#include "dirsh/optimizer.hpp"
#include "dirsh/qasm.hpp"
#include "dirsh/validation.hpp"

namespace fs = std::filesystem;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kInput = 2, kInvalid = 3, kInternal = 4 };

struct Knobs {
  std::string chunks = "auto";
  long generations = 0;
  bool strict_prune = false;
  bool no_prune = false;
  double restart_prob = 0.1;
  long step_cap = 0;
  double exploration = dirsh::kDefaultExploration;
  bool carry_forward = false;
};

void add_knobs(CLI::App* cmd, Knobs& k) {
  cmd->add_option("--chunks", k.chunks, "Chunk count: auto or a positive integer")
      ->capture_default_str();
  cmd->add_option("--generations", k.generations,
                  "Per-chunk generation budget instead of the clock (reproducible runs)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_flag("--strict-prune", k.strict_prune,
                "Keep equal-D_sum swaps only when they lower D_min");
  cmd->add_flag("--no-prune", k.no_prune, "Disable swap pruning");
  cmd->add_option("--restart-prob", k.restart_prob, "Restart probability")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd->add_option("--step-cap", k.step_cap, "Placement steps per attempt (0 = automatic)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--exploration", k.exploration, "UCB exploration constant")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_flag("--carry-forward", k.carry_forward,
                "Let later chunks use time left by earlier ones");
}

dirsh::RunConfig make_config(const Knobs& k, dirsh::Objective objective, double budget,
                             std::uint64_t seed) {
  dirsh::RunConfig c;
  c.objective = objective;
  c.time_budget_seconds = budget;
  c.seed = seed;
  c.exploration = k.exploration;
  c.carry_forward = k.carry_forward;
  c.generator.restart_probability = k.restart_prob;
  c.generator.strict_prune = k.strict_prune;
  c.generator.disable_prune = k.no_prune;
  if (k.step_cap > 0) c.generator.step_cap = k.step_cap;
  if (k.generations > 0) c.max_generations = k.generations;
  if (k.chunks != "auto") {
    std::size_t used = 0;
    int n = 0;
    try {
      n = std::stoi(k.chunks, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used != k.chunks.size() || n < 1) {
      throw dirsh::ParameterError("--chunks must be 'auto' or a positive integer");
    }
    c.chunk_count_override = n;
  }
  dirsh::check_config(c);
  return c;
}

dirsh::Objective objective_from(const std::string& text) {
  const auto o = dirsh::parse_objective(text);
  if (!o) throw dirsh::ParameterError("unknown objective '" + text + "'");
  return *o;
}

dirsh::Topology coupling_from(const std::string& spec) {
  std::vector<std::string> warnings;
  dirsh::Topology t = dirsh::load_coupling(spec, &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
  return t;
}

dirsh::Circuit circuit_from(const std::string& path) {
  try {
    return dirsh::parse_qasm(dirsh::read_file(path));
  } catch (const dirsh::ParseError&) {
    std::cerr << path << ": ";
    throw;
  }
}

// Runs, validates, and returns the report. Validation failures are fatal.
dirsh::RunReport run_checked(const dirsh::Circuit& circuit, const dirsh::Topology& topo,
                             const dirsh::RunConfig& config, const std::string& instance) {
  dirsh::RunReport report = dirsh::optimize(circuit, topo, config);
  const auto check = dirsh::validate(circuit, topo, report.solution);
  if (!check.ok()) {
    std::cerr << instance << ": routed circuit failed validation\n" << check.to_text();
    std::exit(kInvalid);
  }
  return report;
}

struct RouteArgs {
  std::string circuit;
  std::string coupling = "tokyo";
  std::string objective = "swaps";
  double budget = 10.0;
  std::uint64_t seed = 0;
  std::string out;
  std::string stats;
  std::string instance;
  Knobs knobs;
};

int run_route(const RouteArgs& a) {
  const dirsh::Circuit circuit = circuit_from(a.circuit);
  const dirsh::Topology topo = coupling_from(a.coupling);
  const auto config = make_config(a.knobs, objective_from(a.objective), a.budget, a.seed);
  const std::string instance =
      a.instance.empty() ? fs::path(a.circuit).stem().string() : a.instance;

  const auto report = run_checked(circuit, topo, config, instance);
  const std::string qasm = dirsh::emit_routed(circuit, topo, report.solution);
  if (a.out.empty() || a.out == "-") {
    std::cout << qasm;
  } else {
    dirsh::write_file(a.out, qasm);
  }
  const std::string line = dirsh::make_stats(instance, config, report).to_json_line() + "\n";
  if (!a.stats.empty()) {
    dirsh::write_file(a.stats, line);
  } else if (!a.out.empty() && a.out != "-") {
    std::cerr << line;
  }
  return kOk;
}

struct BenchArgs {
  std::string manifest;
  std::string coupling = "tokyo";
  int seeds = 1;
  std::vector<double> budgets{1.0};
  std::vector<std::string> objectives{"swaps", "depth"};
  std::string reference;
  std::string report;
  std::string summary;
  std::string stats;
  Knobs knobs;
};

struct Instance {
  std::string name;
  std::string path;
};

// One circuit path per line, relative to the manifest's directory. Blank lines
// and '#' comments are skipped. The instance name is the file stem.
std::vector<Instance> read_manifest(const std::string& path) {
  std::vector<Instance> out;
  std::istringstream in(dirsh::read_file(path));
  const fs::path base = fs::path(path).parent_path();
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    fs::path p = line.substr(first, last - first + 1);
    if (p.is_relative()) p = base / p;
    out.push_back({p.stem().string(), p.string()});
  }
  if (out.empty()) throw dirsh::ParameterError("manifest " + path + " lists no instances");
  return out;
}

int value_of(const dirsh::Solution& s, dirsh::Objective o) {
  return o == dirsh::Objective::kSwaps ? s.swaps : s.layers();
}

int run_bench(const BenchArgs& a) {
  if (a.seeds < 1) throw dirsh::ParameterError("--seeds must be at least 1");
  const dirsh::Topology topo = coupling_from(a.coupling);
  const auto instances = read_manifest(a.manifest);
  std::vector<dirsh::Objective> objectives;
  for (const auto& o : a.objectives) objectives.push_back(objective_from(o));

  std::vector<dirsh::ResultRow> results;
  std::vector<dirsh::ReferenceRow> references;
  std::string stats_lines;
  for (const Instance& inst : instances) {
    const dirsh::Circuit circuit = circuit_from(inst.path);
    std::optional<dirsh::Solution> greedy;
    if (a.reference.empty()) greedy = dirsh::greedy_route(circuit, topo);
    for (const auto objective : objectives) {
      for (const double budget : a.budgets) {
        for (int k = 0; k < a.seeds; ++k) {
          const auto config =
              make_config(a.knobs, objective, budget, static_cast<std::uint64_t>(k));
          const auto report = run_checked(circuit, topo, config, inst.name);
          results.push_back({inst.name, objective, budget, config.seed,
                             value_of(report.solution, objective)});
          stats_lines += dirsh::make_stats(inst.name, config, report).to_json_line() + "\n";
        }
        if (greedy) references.push_back({inst.name, objective, budget, value_of(*greedy, objective)});
      }
    }
  }
  if (!a.reference.empty()) references = dirsh::parse_reference_csv(dirsh::read_file(a.reference));

  const auto report = dirsh::benchmark_report(results, references);
  if (!a.report.empty()) dirsh::write_file(a.report, dirsh::report_csv(report));
  if (!a.summary.empty()) dirsh::write_file(a.summary, dirsh::summary_csv(report));
  if (!a.stats.empty()) dirsh::write_file(a.stats, stats_lines);
  for (const auto& key : report.unmatched) std::cerr << "unmatched: " << key << '\n';

  std::cout << (a.reference.empty() ? "reference: greedy baseline\n" : "reference: " + a.reference + "\n");
  for (const auto& s : report.summaries) {
    std::printf("%-5s %s  avg delta %+.2f%%%s\n", std::string(dirsh::objective_name(s.objective)).c_str(),
                dirsh::format_table_row(s.budget, s.wins, s.ties, s.losses).c_str(),
                s.average_delta,
                s.flagged ? ("  (" + std::to_string(s.flagged) + " flagged)").c_str() : "");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Qubit routing by randomized greedy construction with bandit-tuned selection"};
  app.require_subcommand(1);

  RouteArgs route;
  auto* r = app.add_subcommand("route", "Route one OpenQASM 2 circuit");
  r->add_option("--circuit", route.circuit, "Input circuit (OpenQASM 2)")->required();
  r->add_option("--coupling", route.coupling, "'tokyo' or a coupling-map JSON file")
      ->capture_default_str();
  r->add_option("--objective", route.objective, "swaps or depth")
      ->check(CLI::IsMember({"swaps", "sw", "depth", "de"}))
      ->capture_default_str();
  r->add_option("--budget", route.budget, "Time budget in seconds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  r->add_option("--seed", route.seed, "Random seed")->capture_default_str();
  r->add_option("--out", route.out, "Routed circuit output (default stdout)");
  r->add_option("--stats", route.stats, "Stats record output (JSON line)");
  r->add_option("--instance", route.instance, "Instance name in the stats record");
  add_knobs(r, route.knobs);

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Route every circuit of a manifest and compare");
  b->add_option("--manifest", bench.manifest, "File listing circuit paths")->required();
  b->add_option("--coupling", bench.coupling, "'tokyo' or a coupling-map JSON file")
      ->capture_default_str();
  b->add_option("--seeds", bench.seeds, "Seeds per configuration (0..K-1)")
      ->capture_default_str();
  b->add_option("--budgets", bench.budgets, "Comma-separated time budgets in seconds")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  b->add_option("--objectives", bench.objectives, "Comma-separated objectives")
      ->delimiter(',')
      ->check(CLI::IsMember({"swaps", "sw", "depth", "de"}));
  b->add_option("--reference", bench.reference,
                "Reference CSV (instance,objective,budget,value); default: greedy baseline");
  b->add_option("--report", bench.report, "Per-instance CSV output");
  b->add_option("--summary", bench.summary, "Win/tie/loss CSV output");
  b->add_option("--stats", bench.stats, "Stats records output (JSON lines)");
  add_knobs(b, bench.knobs);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(r)) return run_route(route);
    return run_bench(bench);
  } catch (const dirsh::ParseError& e) {
    std::cerr << "error: " << (e.unsupported() ? "unsupported: " : "") << e.what() << '\n';
    return kInput;
  } catch (const dirsh::InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const dirsh::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
