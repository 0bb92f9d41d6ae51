#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "qobf/circuit.hpp"
#include "qobf/error.hpp"

using namespace qobf;

namespace {

const GateKind kAllKinds[] = {
    GateKind::X,   GateKind::Y,  GateKind::Z,  GateKind::H,    GateKind::S,
    GateKind::SDG, GateKind::T,  GateKind::TDG, GateKind::RX,  GateKind::RY,
    GateKind::RZ,  GateKind::P,  GateKind::CX, GateKind::CY,   GateKind::CZ,
    GateKind::CP,  GateKind::CS, GateKind::SWAP, GateKind::CCX, GateKind::CSWAP};

std::vector<double> dummy_params(GateKind kind) {
    return param_count(kind) == 1 ? std::vector<double>{0.7} : std::vector<double>{};
}

} // namespace

TEST_CASE("measurement classification") {
    CHECK(classify(GateKind::X) == MeasurementClass::BasisPermuting);
    CHECK(classify(GateKind::S) == MeasurementClass::PhaseOnly);
    CHECK(classify(GateKind::H) == MeasurementClass::Superposing);
    CHECK(classify(GateKind::RZ) == MeasurementClass::PhaseOnly);
    CHECK(classify(GateKind::RX) == MeasurementClass::Superposing);
    CHECK(classify(GateKind::CSWAP) == MeasurementClass::BasisPermuting);
    CHECK(classify(GateKind::CS) == MeasurementClass::PhaseOnly);
}

TEST_CASE("phase-only kinds have diagonal unitaries") {
    for (GateKind kind : kAllKinds) {
        if (classify(kind) != MeasurementClass::PhaseOnly) continue;
        const auto u = unitary(kind, dummy_params(kind));
        const std::size_t dim = std::size_t{1} << arity(kind);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c)
                if (r != c) CHECK(std::abs(u[r * dim + c]) == doctest::Approx(0.0));
    }
}

TEST_CASE("basis-permuting kinds have permutation-magnitude unitaries") {
    for (GateKind kind : kAllKinds) {
        if (classify(kind) != MeasurementClass::BasisPermuting) continue;
        const auto u = unitary(kind, dummy_params(kind));
        const std::size_t dim = std::size_t{1} << arity(kind);
        for (std::size_t c = 0; c < dim; ++c) {
            std::size_t nonzero = 0;
            for (std::size_t r = 0; r < dim; ++r) {
                const double mag = std::abs(u[r * dim + c]);
                if (mag > 1e-12) {
                    ++nonzero;
                    CHECK(mag == doctest::Approx(1.0));
                }
            }
            CHECK(nonzero == 1);
        }
    }
}

TEST_CASE("append_gate base case") {
    QuantumCircuit c;
    c.num_qubits = 1;
    const auto out = append_gate(c, {GateKind::X, {}, {0}});
    CHECK(out.gates.size() == 1);
    CHECK(out.measurements.empty());
}

TEST_CASE("append_gate keeps the measurement block terminal") {
    QuantumCircuit c;
    c.num_qubits = 2;
    c.measurements = {{0, 0}, {1, 1}};
    const auto out = append_gate(c, {GateKind::CX, {}, {0, 1}});
    CHECK(out.gates.size() == 1);
    CHECK(out.measurements == c.measurements);
    CHECK(validate(out).empty());
}

TEST_CASE("append_gate rejects bad operands") {
    QuantumCircuit c;
    c.num_qubits = 3;
    CHECK_THROWS_AS(append_gate(c, {GateKind::SWAP, {}, {2, 2}}), Error);
    CHECK_THROWS_AS(append_gate(c, {GateKind::X, {}, {3}}), Error);
    CHECK_THROWS_AS(append_gate(c, {GateKind::CX, {}, {0}}), Error);
}

TEST_CASE("validate accepts a well-formed circuit") {
    QuantumCircuit c;
    c.num_qubits = 2;
    c.gates = {{GateKind::H, {}, {0}}, {GateKind::CX, {}, {0, 1}}};
    c.measurements = {{0, 0}, {1, 1}};
    CHECK(validate(c).empty());
}

TEST_CASE("validate reports classical bit reuse") {
    QuantumCircuit c;
    c.num_qubits = 2;
    c.measurements = {{0, 0}, {1, 0}};
    const auto report = validate(c);
    REQUIRE(!report.empty());
    bool found = false;
    for (const auto& v : report) found |= v.message == "classical bit reuse";
    CHECK(found);
}

TEST_CASE("validate reports non-contiguous classical bits") {
    QuantumCircuit c;
    c.num_qubits = 3;
    c.measurements = {{0, 0}, {1, 2}};
    CHECK(!validate(c).empty());
}

TEST_CASE("bitstring rendering puts bit 0 rightmost") {
    CHECK(render_bits(0b01001, 5) == "01001");
    CHECK(render_bits(1, 5) == "00001");
    CHECK(parse_bits("01001") == 0b01001);
    CHECK(parse_bits(render_bits(0b10110, 5)) == 0b10110);
    CHECK_THROWS_AS(parse_bits("01a"), Error);
}
