#include "dirsh/bench.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <tuple>

#include "dirsh/errors.hpp"

namespace dirsh {

std::optional<double> delta(double reference, double value) {
  if (reference == 0.0) {
    if (value == 0.0) return 0.0;
    return std::nullopt;
  }
  return 100.0 * (reference - value) / reference;
}

namespace {

std::string format_number(double x) {
  char buf[64];
  if (x == std::floor(x) && std::fabs(x) < 1e15) {
    std::snprintf(buf, sizeof buf, "%.0f", x);
  } else {
    std::snprintf(buf, sizeof buf, "%g", x);
  }
  return buf;
}

std::string format_delta(const std::optional<double>& d) {
  if (!d) return "NA";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", *d);
  return buf;
}

using Key = std::tuple<std::string, double, int>;  // instance, budget, objective

std::string key_name(const Key& k) {
  return std::get<0>(k) + "/" +
         std::string(objective_name(static_cast<Objective>(std::get<2>(k)))) + "/" +
         format_number(std::get<1>(k));
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    std::string_view f = line.substr(start, comma == std::string_view::npos ? line.npos : comma - start);
    while (!f.empty() && (f.front() == ' ' || f.front() == '\t')) f.remove_prefix(1);
    while (!f.empty() && (f.back() == ' ' || f.back() == '\t' || f.back() == '\r')) f.remove_suffix(1);
    fields.emplace_back(f);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

}  // namespace

BenchmarkReport benchmark_report(std::span<const ResultRow> results,
                                 std::span<const ReferenceRow> references) {
  std::map<Key, int> best;
  for (const ResultRow& r : results) {
    const Key k{r.instance, r.budget, static_cast<int>(r.objective)};
    auto [it, fresh] = best.try_emplace(k, r.value);
    if (!fresh) it->second = std::min(it->second, r.value);
  }
  std::map<Key, int> ref;
  for (const ReferenceRow& r : references) {
    ref[Key{r.instance, r.budget, static_cast<int>(r.objective)}] = r.value;
  }

  BenchmarkReport report;
  std::map<std::pair<int, double>, BudgetSummary> summaries;
  std::map<std::pair<int, double>, double> delta_sums;
  for (const auto& [k, value] : best) {
    const auto it = ref.find(k);
    if (it == ref.end()) {
      report.unmatched.push_back(key_name(k));
      continue;
    }
    InstanceDelta row;
    row.instance = std::get<0>(k);
    row.budget = std::get<1>(k);
    row.objective = static_cast<Objective>(std::get<2>(k));
    row.reference = it->second;
    row.value = value;
    row.delta = delta(row.reference, row.value);
    report.rows.push_back(row);

    auto& s = summaries[{std::get<2>(k), row.budget}];
    s.objective = row.objective;
    s.budget = row.budget;
    if (!row.delta) {
      ++s.flagged;
      continue;
    }
    ++s.instances;
    if (*row.delta > 0) {
      ++s.wins;
    } else if (*row.delta < 0) {
      ++s.losses;
    } else {
      ++s.ties;
    }
    delta_sums[{std::get<2>(k), row.budget}] += *row.delta;
  }
  for (const auto& [k, v] : ref) {
    if (!best.count(k)) report.unmatched.push_back(key_name(k));
  }
  for (auto& [k, s] : summaries) {
    s.average_delta = s.instances > 0 ? delta_sums[k] / s.instances : 0.0;
    report.summaries.push_back(s);
  }
  return report;
}

std::string report_csv(const BenchmarkReport& report) {
  // instance, budget -> per-objective rows
  std::map<std::pair<std::string, double>, std::pair<const InstanceDelta*, const InstanceDelta*>>
      joined;
  for (const InstanceDelta& row : report.rows) {
    auto& slot = joined[{row.instance, row.budget}];
    (row.objective == Objective::kSwaps ? slot.first : slot.second) = &row;
  }
  std::ostringstream out;
  out << "instance,budget,ref_swaps,dirsh_swaps,delta_swaps,ref_depth,dirsh_depth,delta_depth\n";
  auto cells = [&](const InstanceDelta* r) {
    if (r == nullptr) return std::string(",,");
    return std::to_string(r->reference) + "," + std::to_string(r->value) + "," +
           format_delta(r->delta);
  };
  for (const auto& [key, pair] : joined) {
    out << key.first << ',' << format_number(key.second) << ',' << cells(pair.first) << ','
        << cells(pair.second) << '\n';
  }
  return out.str();
}

std::string summary_csv(const BenchmarkReport& report) {
  std::ostringstream out;
  out << "objective,budget,instances,wins,ties,losses,flagged,average_delta\n";
  for (const BudgetSummary& s : report.summaries) {
    out << objective_name(s.objective) << ',' << format_number(s.budget) << ',' << s.instances
        << ',' << s.wins << ',' << s.ties << ',' << s.losses << ',' << s.flagged << ','
        << format_delta(s.average_delta) << '\n';
  }
  return out.str();
}

std::string format_table_row(double budget, int wins, int ties, int losses) {
  return format_number(budget) + ", " + std::to_string(wins) + ", " + std::to_string(ties) +
         ", " + std::to_string(losses);
}

std::vector<ReferenceRow> parse_reference_csv(std::string_view text) {
  std::vector<ReferenceRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r" || line[0] == '#') continue;
    const auto f = split_csv_line(line);
    if (!header) {
      if (f.size() != 4 || f[0] != "instance" || f[1] != "objective" || f[2] != "budget" ||
          f[3] != "value") {
        throw ParseError(line_no, "reference CSV header must be instance,objective,budget,value");
      }
      header = true;
      continue;
    }
    if (f.size() != 4) throw ParseError(line_no, "expected 4 fields");
    ReferenceRow r;
    r.instance = f[0];
    const auto obj = parse_objective(f[1]);
    if (!obj) throw ParseError(line_no, "unknown objective '" + f[1] + "'");
    r.objective = *obj;
    try {
      std::size_t used = 0;
      r.budget = std::stod(f[2], &used);
      if (used != f[2].size()) throw std::invalid_argument(f[2]);
      r.value = std::stoi(f[3], &used);
      if (used != f[3].size()) throw std::invalid_argument(f[3]);
    } catch (const std::logic_error&) {
      throw ParseError(line_no, "bad number in reference row");
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string reference_csv(std::span<const ReferenceRow> rows) {
  std::ostringstream out;
  out << "instance,objective,budget,value\n";
  for (const ReferenceRow& r : rows) {
    out << r.instance << ',' << objective_name(r.objective) << ',' << format_number(r.budget)
        << ',' << r.value << '\n';
  }
  return out.str();
}

}  // namespace dirsh
