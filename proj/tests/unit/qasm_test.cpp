#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "dirsh/errors.hpp"
#include "dirsh/io.hpp"
#include "dirsh/optimizer.hpp"
#include "dirsh/qasm.hpp"
#include "dirsh/validation.hpp"
#include "instances.hpp"

namespace dirsh {
namespace {

constexpr const char* kHeader = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[3];\n";

TEST(Parse, SharedQubitEdge) {
  const Circuit c = parse_qasm(std::string(kHeader) + "cx q[0],q[1];\nh q[1];\n");
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.precedence_edges(), (std::vector<Precedence>{{0, 1}}));
}

TEST(Parse, DisjointQubitsNoEdge) {
  const Circuit c = parse_qasm(std::string(kHeader) + "cx q[0],q[1];\nh q[2];\n");
  EXPECT_TRUE(c.precedence_edges().empty());
}

TEST(Parse, MeasureRejectedWithLine) {
  try {
    parse_qasm(std::string(kHeader) + "h q[0];\nmeasure q[0] -> c[0];\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 5);
    EXPECT_TRUE(e.unsupported());
  }
}

TEST(Parse, UnsupportedConstructs) {
  for (const char* bad : {"creg c[3];", "reset q[0];", "if(c==1) x q[0];",
                          "gate foo a { x a; }", "ccx q[0],q[1],q[2];"}) {
    EXPECT_THROW(parse_qasm(std::string(kHeader) + bad + "\n"), ParseError) << bad;
  }
}

TEST(Parse, SecondRegisterUnsupported) {
  try {
    parse_qasm(std::string(kHeader) + "qreg r[2];\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_TRUE(e.unsupported());
    EXPECT_EQ(e.line(), 4);
  }
}

TEST(Parse, MalformedInput) {
  EXPECT_THROW(parse_qasm("h q[0];"), ParseError);
  EXPECT_THROW(parse_qasm(std::string(kHeader) + "h q[3];"), ParseError);
  EXPECT_THROW(parse_qasm(std::string(kHeader) + "h r[0];"), ParseError);
  EXPECT_THROW(parse_qasm(std::string(kHeader) + "cx q[1],q[1];"), ParseError);
  EXPECT_THROW(parse_qasm(std::string(kHeader) + "h q[0]"), ParseError);
  EXPECT_THROW(parse_qasm("OPENQASM 3.0;\nqreg q[1];"), ParseError);
}

TEST(Parse, CommentsBarriersParams) {
  const Circuit c = parse_qasm(std::string(kHeader) +
                               "// leading comment\n"
                               "rz(pi/2) q[0]; // trailing\n"
                               "barrier q[0],q[1];\n"
                               "cz q[2], q[0];\n"
                               "swap q[1],q[2];\n");
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c.gate(0).label, "rz");
  EXPECT_EQ(c.gate(0).params, "pi/2");
  EXPECT_EQ(c.gate(1).kind, GateKind::kBinary);
  EXPECT_EQ(c.gate(2).kind, GateKind::kBinary);
  EXPECT_EQ(c.gate(2).label, "swap");
}

std::map<std::string, int> multiset(const Circuit& c) {
  std::map<std::string, int> m;
  for (const Gate& g : c.gates()) {
    m[g.label + "(" + g.params + ")" + std::to_string(g.logical[0]) + "," +
      std::to_string(g.logical[1])]++;
  }
  return m;
}

std::vector<std::vector<std::string>> per_qubit(const Circuit& c) {
  std::vector<std::vector<std::string>> out(static_cast<std::size_t>(c.num_qubits()));
  for (const Gate& g : c.gates()) {
    for (int k = 0; k < g.arity(); ++k) {
      out[static_cast<std::size_t>(g.logical[static_cast<std::size_t>(k)])].push_back(g.label + g.params);
    }
  }
  return out;
}

TEST(RoundTrip, EmitParseFixpoint) {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const Circuit c = testing::random_circuit(6, 80, 0.5, rng);
    const std::string text = emit_circuit(c);
    const Circuit back = parse_qasm(text);
    EXPECT_EQ(multiset(back), multiset(c));
    EXPECT_EQ(per_qubit(back), per_qubit(c));
    EXPECT_EQ(emit_circuit(back), text);
  }
}

TEST(Emit, NoSwapSolutionKeepsGateCount) {
  const Topology t = make_line(3);
  const Circuit c = parse_qasm(std::string(kHeader) + "h q[0];\ncx q[0],q[1];\ncx q[1],q[2];\n");
  RunConfig cfg;
  cfg.max_generations = 10;
  const auto r = optimize(c, t, cfg);
  ASSERT_EQ(r.solution.swaps, 0);
  EXPECT_EQ(parse_qasm(emit_routed(c, t, r.solution)).size(), c.size());
}

TEST(Emit, RoutedOutputHasSwapsAndAdjacentOperands) {
  const Topology t = builtin_tokyo();
  Rng rng(8);
  const Circuit c = testing::random_circuit(20, 150, 0.7, rng);
  RunConfig cfg;
  cfg.max_generations = 5;
  const auto r = optimize(c, t, cfg);
  const Circuit routed = parse_qasm(emit_routed(c, t, r.solution));
  EXPECT_EQ(routed.num_qubits(), 20);
  EXPECT_EQ(routed.size(), c.size() + static_cast<std::size_t>(r.solution.swaps));
  int swaps = 0;
  for (const Gate& g : routed.gates()) {
    if (g.kind == GateKind::kBinary) EXPECT_TRUE(t.adjacent(g.logical[0], g.logical[1]));
    swaps += g.label == "swap";
  }
  EXPECT_EQ(swaps, r.solution.swaps);
}

TEST(Stats, RecordMatchesRecount) {
  const Topology t = builtin_tokyo();
  Rng rng(9);
  const Circuit c = testing::random_circuit(15, 100, 0.6, rng);
  RunConfig cfg;
  cfg.max_generations = 4;
  cfg.seed = 3;
  const auto r = optimize(c, t, cfg);
  const StatsRecord s = make_stats("demo", cfg, r);
  EXPECT_EQ(s.swaps, recompute_metrics(c, r.solution, 20).swaps);
  EXPECT_FALSE(s.wall_seconds);
  const std::string line = s.to_json_line();
  EXPECT_EQ(line.rfind("{\"instance\":\"demo\",\"objective\":\"swaps\",\"seed\":3,", 0), 0u) << line;
  EXPECT_NE(line.find("\"wall_seconds\":null"), std::string::npos);
  const StatsRecord back = StatsRecord::from_json_line(line);
  EXPECT_EQ(back.to_json_line(), line);
  EXPECT_EQ(back.layers, r.solution.depth + 1);
}

}  // namespace
}  // namespace dirsh
