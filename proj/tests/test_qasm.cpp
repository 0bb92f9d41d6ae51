#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "qobf/bench.hpp"
#include "qobf/qasm.hpp"
#include "qobf/statevector.hpp"

#include <random>

using namespace qobf;

TEST_CASE("minimal program") {
    const auto r = parse_qasm("OPENQASM 2.0; qreg q[1];");
    REQUIRE(r.ok());
    CHECK(r.circuit->num_qubits == 1);
    CHECK(r.circuit->gates.empty());
    CHECK(r.circuit->measurements.empty());
}

TEST_CASE("hand-written BV program for secret 11010") {
    const std::string src = R"(OPENQASM 2.0;
include "qelib1.inc";
qreg q[6];
creg c[5];
x q[5];
h q[0]; h q[1]; h q[2]; h q[3]; h q[4]; h q[5];
cx q[1],q[5];
cx q[3],q[5];
cx q[4],q[5];
h q[0]; h q[1]; h q[2]; h q[3]; h q[4];
measure q[0] -> c[0];
measure q[1] -> c[1];
measure q[2] -> c[2];
measure q[3] -> c[3];
measure q[4] -> c[4];
)";
    // oracle wires: secret 11010 sets bits 1, 3, 4 (bit 0 rightmost)
    const auto r = parse_qasm(src);
    REQUIRE(r.ok());
    std::size_t cx_count = 0;
    for (const auto& g : r.circuit->gates) cx_count += g.kind == GateKind::CX;
    CHECK(cx_count == 3); // one per set secret bit
    CHECK(r.circuit->measurements.size() == 5);

    const auto probs = circuit_probabilities(*r.circuit);
    CHECK(probs.probs[parse_bits("11010")] == doctest::Approx(1.0));
}

TEST_CASE("unknown gate mnemonic") {
    const auto r = parse_qasm("OPENQASM 2.0;\nqreg q[1];\nv q[0];\n");
    CHECK(!r.ok());
    REQUIRE(!r.diagnostics.empty());
    CHECK(r.diagnostics[0].message == "unknown gate 'v'");
    CHECK(r.diagnostics[0].span.line == 3);
    CHECK(r.diagnostics[0].span.column == 1);
}

TEST_CASE("index out of declared range") {
    CHECK(!parse_qasm("OPENQASM 2.0; qreg q[2]; x q[2];").ok());
}

TEST_CASE("gate after measurement on the same qubit") {
    const auto r = parse_qasm(
        "OPENQASM 2.0; qreg q[1]; creg c[1]; measure q[0] -> c[0]; x q[0];");
    CHECK(!r.ok());
}

TEST_CASE("barrier is discarded with a warning") {
    const auto r =
        parse_qasm("OPENQASM 2.0; qreg q[2]; x q[0]; barrier q[0],q[1]; x q[1];");
    REQUIRE(r.ok());
    CHECK(r.circuit->gates.size() == 2);
    bool warned = false;
    for (const auto& d : r.diagnostics)
        warned |= d.severity == ParseDiagnostic::Severity::Warning;
    CHECK(warned);
}

TEST_CASE("angle literal forms") {
    const auto r = parse_qasm(
        "OPENQASM 2.0; qreg q[1]; rz(pi) q[0]; rz(pi/2) q[0]; rz(3*pi/4) q[0]; "
        "rz(0.5) q[0]; rz(-pi/4) q[0]; p(2*pi) q[0];");
    REQUIRE(r.ok());
    CHECK(r.circuit->gates[0].params[0] == doctest::Approx(oracle::kPi));
    CHECK(r.circuit->gates[1].params[0] == doctest::Approx(oracle::kPi / 2));
    CHECK(r.circuit->gates[2].params[0] == doctest::Approx(3 * oracle::kPi / 4));
    CHECK(r.circuit->gates[3].params[0] == doctest::Approx(0.5));
    CHECK(r.circuit->gates[4].params[0] == doctest::Approx(-oracle::kPi / 4));
    CHECK(r.circuit->gates[5].params[0] == doctest::Approx(2 * oracle::kPi));
}

TEST_CASE("u1 is an alias of p") {
    const auto r = parse_qasm("OPENQASM 2.0; qreg q[1]; u1(0.25) q[0];");
    REQUIRE(r.ok());
    CHECK(r.circuit->gates[0].kind == GateKind::P);
}

TEST_CASE("emit produces the documented one-qubit program") {
    QuantumCircuit c;
    c.num_qubits = 1;
    c.gates = {{GateKind::X, {}, {0}}};
    c.measurements = {{0, 0}};
    CHECK(emit_qasm(c) ==
          "OPENQASM 2.0;\n"
          "include \"qelib1.inc\";\n"
          "qreg q[1];\n"
          "creg c[1];\n"
          "x q[0];\n"
          "measure q[0] -> c[0];\n");
}

TEST_CASE("rz(pi/4) round-trips bit-exactly") {
    QuantumCircuit c;
    c.num_qubits = 1;
    c.gates = {{GateKind::RZ, {oracle::kPi / 4}, {0}}};
    const std::string text = emit_qasm(c);
    CHECK(text.find("rz(0.78539816339744828) q[0];") != std::string::npos);
    const auto r = parse_qasm(text);
    REQUIRE(r.ok());
    CHECK(r.circuit->gates[0].params[0] == oracle::kPi / 4); // bit-exact
}

TEST_CASE("parse-emit-parse is a fixed point on the benchmark circuits") {
    for (const char* algo : {"bv", "grover", "qaoa", "shor", "hhl"}) {
        const auto bench = benchmark_by_name(algo);
        const auto once = parse_qasm(emit_qasm(bench.circuit));
        REQUIRE(once.ok());
        CHECK(*once.circuit == bench.circuit);
        const auto twice = parse_qasm(emit_qasm(*once.circuit));
        REQUIRE(twice.ok());
        CHECK(*twice.circuit == *once.circuit);
    }
}

TEST_CASE("round-trip property on random circuits") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        const auto c = oracle::random_circuit(rng, 2 + rng() % 5, 1 + rng() % 15);
        const auto r = parse_qasm(emit_qasm(c));
        REQUIRE(r.ok());
        CHECK(*r.circuit == c);
    }
}

TEST_CASE("fuzzing random bytes yields diagnostics, never crashes") {
    std::mt19937_64 rng(7);
    const std::string alphabet =
        "OPENQASM2.0;qregcxhswapmeasure[]();->|#@ \n\tpi/*0123456789\"\\x{}";
    for (int trial = 0; trial < 100000; ++trial) {
        std::string src;
        const std::size_t len = rng() % 48;
        for (std::size_t i = 0; i < len; ++i) {
            if (rng() % 4 == 0) {
                src += static_cast<char>(rng() % 256);
            } else {
                src += alphabet[rng() % alphabet.size()];
            }
        }
        const auto r = parse_qasm(src); // must not throw or crash
        if (!r.ok()) CHECK(!r.diagnostics.empty());
    }
}
