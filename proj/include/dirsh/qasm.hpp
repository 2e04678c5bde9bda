#pragma once

#include <string>
#include <string_view>

#include "dirsh/circuit.hpp"
#include "dirsh/generator.hpp"
#include "dirsh/topology.hpp"

namespace dirsh {

/// Parses the accepted OpenQASM 2 subset:
///
///   OPENQASM 2.0;  include "...";  qreg name[n];   (exactly one register)
///   g q[i];  g(params) q[i];  g q[i],q[j];  g(params) q[i],q[j];
///   barrier ...;   // comments
///
/// Any two-operand gate (cx, cz, swap, ...) is binary. Classical registers,
/// measurement, reset, conditionals, gate definitions and gates with three or
/// more operands raise ParseError with the offending line. Precedence is the
/// per-qubit file order.
Circuit parse_qasm(std::string_view text);

/// The logical circuit back as OpenQASM 2 over a register `q`.
std::string emit_circuit(const Circuit& circuit);

/// Routed circuit as OpenQASM 2 over the physical register, inserted swaps
/// written as `swap`.
std::string emit_routed(const Circuit& circuit, const Topology& topology,
                        const Solution& solution);

}  // namespace dirsh
