#include "dirsh/qasm.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include "dirsh/errors.hpp"

namespace dirsh {

namespace {

struct Statement {
  std::string text;
  int line = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits on ';' with comments stripped; each statement remembers the line
// it starts on.
std::vector<Statement> split_statements(std::string_view text, int& trailing_line) {
  std::vector<Statement> out;
  std::string current;
  int line = 1;
  int start_line = 1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') ++i;
      if (i < text.size()) ++line;
      continue;
    }
    if (c == '\n') ++line;
    if (c == ';') {
      out.push_back({std::string(trim(current)), start_line});
      current.clear();
      continue;
    }
    if (trim(current).empty() && !std::isspace(static_cast<unsigned char>(c))) start_line = line;
    current.push_back(c);
  }
  trailing_line = start_line;
  if (!trim(current).empty()) {
    throw ParseError(start_line, "statement not terminated by ';'");
  }
  return out;
}

std::optional<int> parse_int(std::string_view s) {
  s = trim(s);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

// "name[index]" -> index, checking the register name.
int parse_operand(std::string_view s, const std::string& reg, int size, int line) {
  s = trim(s);
  const auto open = s.find('[');
  const auto close = s.find(']');
  if (open == std::string_view::npos || close != s.size() - 1 || close < open) {
    throw ParseError(line, "expected operand of the form " + reg + "[i], got '" +
                               std::string(s) + "'");
  }
  const auto name = trim(s.substr(0, open));
  if (name != reg) {
    throw ParseError(line, "unknown register '" + std::string(name) + "'");
  }
  const auto index = parse_int(s.substr(open + 1, close - open - 1));
  if (!index || *index < 0 || *index >= size) {
    throw ParseError(line, "qubit index out of range in '" + std::string(s) + "'");
  }
  return *index;
}

std::string keyword_of(std::string_view stmt) {
  std::size_t i = 0;
  while (i < stmt.size() && (std::isalnum(static_cast<unsigned char>(stmt[i])) || stmt[i] == '_')) {
    ++i;
  }
  return std::string(stmt.substr(0, i));
}

}  // namespace

Circuit parse_qasm(std::string_view text) {
  int trailing_line = 0;
  const auto statements = split_statements(text, trailing_line);

  std::string reg;
  int reg_size = -1;
  std::vector<Gate> gates;

  for (const Statement& st : statements) {
    const std::string_view s = st.text;
    if (s.empty()) continue;
    const std::string kw = keyword_of(s);

    if (kw == "OPENQASM") {
      if (trim(s.substr(kw.size())) != "2.0") {
        throw ParseError(st.line, "only OPENQASM 2.0 is supported", true);
      }
      continue;
    }
    if (kw == "include") continue;
    if (kw == "qreg") {
      if (reg_size >= 0) {
        throw ParseError(st.line, "multiple quantum registers are not supported", true);
      }
      const auto decl = trim(s.substr(kw.size()));
      const auto open = decl.find('[');
      const auto close = decl.find(']');
      if (open == std::string_view::npos || close != decl.size() - 1) {
        throw ParseError(st.line, "malformed qreg declaration");
      }
      reg = std::string(trim(decl.substr(0, open)));
      const auto size = parse_int(decl.substr(open + 1, close - open - 1));
      if (!is_identifier(reg) || !size || *size <= 0) {
        throw ParseError(st.line, "malformed qreg declaration");
      }
      reg_size = *size;
      continue;
    }
    if (kw == "creg" || kw == "measure" || kw == "reset" || kw == "if" || kw == "gate" ||
        kw == "opaque") {
      throw ParseError(st.line, "unsupported construct '" + kw + "'", true);
    }
    if (kw == "barrier") continue;
    if (kw.empty() || !is_identifier(kw)) {
      throw ParseError(st.line, "cannot parse '" + std::string(s) + "'");
    }
    if (reg_size < 0) throw ParseError(st.line, "gate before qreg declaration");

    std::string_view rest = s.substr(kw.size());
    std::string params;
    rest = trim(rest);
    if (!rest.empty() && rest.front() == '(') {
      int depth = 0;
      std::size_t i = 0;
      for (; i < rest.size(); ++i) {
        if (rest[i] == '(') ++depth;
        if (rest[i] == ')' && --depth == 0) break;
      }
      if (i == rest.size()) throw ParseError(st.line, "unbalanced parentheses");
      params = std::string(trim(rest.substr(1, i - 1)));
      rest = rest.substr(i + 1);
    }

    std::vector<int> operands;
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      const auto comma = rest.find(',', pos);
      const auto piece = rest.substr(pos, comma == std::string_view::npos ? rest.npos : comma - pos);
      operands.push_back(parse_operand(piece, reg, reg_size, st.line));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    if (operands.size() == 1) {
      gates.push_back(make_unary(kw, operands[0], params));
    } else if (operands.size() == 2) {
      if (operands[0] == operands[1]) {
        throw ParseError(st.line, "two-qubit gate on a single qubit");
      }
      gates.push_back(make_binary(kw, operands[0], operands[1], params));
    } else {
      throw ParseError(st.line, "gates on more than two qubits are not supported", true);
    }
  }
  if (reg_size < 0) throw ParseError(trailing_line, "no qreg declaration");
  return Circuit::from_sequence(reg_size, std::move(gates));
}

namespace {

void write_header(std::ostringstream& out, int width) {
  out << "OPENQASM 2.0;\n"
      << "include \"qelib1.inc\";\n"
      << "qreg q[" << width << "];\n";
}

void write_gate(std::ostringstream& out, const std::string& label, const std::string& params,
                int a, int b) {
  out << label;
  if (!params.empty()) out << '(' << params << ')';
  out << " q[" << a << ']';
  if (b >= 0) out << ",q[" << b << ']';
  out << ";\n";
}

}  // namespace

std::string emit_circuit(const Circuit& circuit) {
  std::ostringstream out;
  write_header(out, circuit.num_qubits());
  for (const Gate& g : circuit.gates()) {
    write_gate(out, g.label, g.params, g.logical[0],
               g.kind == GateKind::kBinary ? g.logical[1] : -1);
  }
  return out.str();
}

std::string emit_routed(const Circuit& circuit, const Topology& topology,
                        const Solution& solution) {
  std::ostringstream out;
  write_header(out, topology.num_qubits());
  for (const PlacedGate& pg : solution.placed) {
    if (pg.kind == GateKind::kSwap) {
      write_gate(out, "swap", {}, pg.physical[0], pg.physical[1]);
      continue;
    }
    const Gate& g = circuit.gate(pg.source);
    write_gate(out, g.label, g.params, pg.physical[0],
               pg.kind == GateKind::kBinary ? pg.physical[1] : -1);
  }
  return out.str();
}

}  // namespace dirsh
