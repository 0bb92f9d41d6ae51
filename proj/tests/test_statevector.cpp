#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "qobf/corrector.hpp"
#include "qobf/error.hpp"
#include "qobf/statevector.hpp"

#include <random>

using namespace qobf;

namespace {

QuantumCircuit bell_pair() {
    QuantumCircuit c;
    c.num_qubits = 2;
    c.gates = {{GateKind::H, {}, {0}}, {GateKind::CX, {}, {0, 1}}};
    return c;
}

} // namespace

TEST_CASE("empty circuit is the all-zeros state") {
    QuantumCircuit c;
    c.num_qubits = 2;
    const auto state = evolve(c);
    CHECK(state.amplitudes[0] == std::complex<double>{1.0, 0.0});
    for (std::size_t i = 1; i < 4; ++i)
        CHECK(std::abs(state.amplitudes[i]) == doctest::Approx(0.0));
}

TEST_CASE("Hadamard gives an equal superposition") {
    QuantumCircuit c;
    c.num_qubits = 1;
    c.gates = {{GateKind::H, {}, {0}}};
    const auto state = evolve(c);
    const double s2 = 1.0 / std::sqrt(2.0);
    CHECK(state.amplitudes[0].real() == doctest::Approx(s2));
    CHECK(state.amplitudes[1].real() == doctest::Approx(s2));
}

TEST_CASE("Bell state against the dense-matrix oracle") {
    const auto c = bell_pair();
    const auto state = evolve(c);
    const auto reference = oracle::simulate(c);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(state.amplitudes[i].real() == doctest::Approx(reference[i].real()));
        CHECK(state.amplitudes[i].imag() == doctest::Approx(reference[i].imag()));
    }
    const double s2 = 1.0 / std::sqrt(2.0);
    CHECK(state.amplitudes[0].real() == doctest::Approx(s2));
    CHECK(state.amplitudes[3].real() == doctest::Approx(s2));
}

TEST_CASE("stride engine matches the dense oracle on random circuits") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const auto c = oracle::random_circuit(rng, 2 + rng() % 4, 1 + rng() % 12);
        const auto probs = circuit_probabilities(c);
        const auto reference = oracle::measured_probs(c);
        CHECK(oracle::max_abs_diff(probs.probs, reference) < 1e-12);
    }
}

TEST_CASE("Bell state measurement probabilities") {
    auto c = bell_pair();
    c.measurements = {{0, 0}, {1, 1}};
    const auto probs = circuit_probabilities(c);
    CHECK(probs.probs[0] == doctest::Approx(0.5));
    CHECK(probs.probs[1] == doctest::Approx(0.0));
    CHECK(probs.probs[2] == doctest::Approx(0.0));
    CHECK(probs.probs[3] == doctest::Approx(0.5));
}

TEST_CASE("marginalization over unmeasured qubits") {
    auto c = bell_pair();
    c.measurements = {{0, 0}};
    const auto probs = circuit_probabilities(c);
    CHECK(probs.probs[0] == doctest::Approx(0.5));
    CHECK(probs.probs[1] == doctest::Approx(0.5));
}

TEST_CASE("amplitudes (0.6, 0.8i) measure as (0.36, 0.64)") {
    Statevector state;
    state.num_qubits = 1;
    state.amplitudes = {{0.6, 0.0}, {0.0, 0.8}};
    const auto probs = probabilities(state, {{0, 0}});
    CHECK(probs.probs[0] == doctest::Approx(0.36));
    CHECK(probs.probs[1] == doctest::Approx(0.64));
}

TEST_CASE("norm is preserved along a deep random circuit") {
    std::mt19937_64 rng(23);
    const auto c = oracle::random_circuit(rng, 5, 40);
    const auto state = evolve(c);
    double norm = 0.0;
    for (const auto& a : state.amplitudes) norm += std::norm(a);
    CHECK(std::abs(norm - 1.0) < 1e-10);
}

TEST_CASE("qubit cap is enforced") {
    QuantumCircuit c;
    c.num_qubits = 17;
    CHECK_THROWS_AS(evolve(c), Error);
}

TEST_CASE("appended phase-only gate leaves probabilities unchanged") {
    std::mt19937_64 rng(31);
    const GateKind phase_kinds[] = {GateKind::Z,  GateKind::S,  GateKind::SDG,
                                    GateKind::T,  GateKind::RZ, GateKind::P,
                                    GateKind::CZ, GateKind::CP, GateKind::CS};
    for (int trial = 0; trial < 20; ++trial) {
        const auto c = oracle::random_circuit(rng, 3, 1 + rng() % 10);
        const auto base = circuit_probabilities(c);
        const GateKind kind = phase_kinds[rng() % std::size(phase_kinds)];
        GateInstance g;
        g.kind = kind;
        for (std::size_t q = 0; q < arity(kind); ++q) g.qubits.push_back(q);
        for (std::size_t p = 0; p < param_count(kind); ++p) g.params.push_back(1.234);
        const auto extended = append_gate(c, g);
        CHECK(oracle::max_abs_diff(circuit_probabilities(extended).probs, base.probs) <
              1e-12);
    }
}

TEST_CASE("appended basis-permuting gate permutes the probability vector") {
    std::mt19937_64 rng(37);
    const GateKind perm_kinds[] = {GateKind::X,    GateKind::Y,   GateKind::CX,
                                   GateKind::CY,   GateKind::SWAP, GateKind::CCX,
                                   GateKind::CSWAP};
    for (int trial = 0; trial < 20; ++trial) {
        const auto c = oracle::random_circuit(rng, 3, 1 + rng() % 10);
        const auto base = circuit_probabilities(c);
        const GateKind kind = perm_kinds[rng() % std::size(perm_kinds)];
        GateInstance g;
        g.kind = kind;
        for (std::size_t q = 0; q < arity(kind); ++q) g.qubits.push_back(q);
        const auto extended = circuit_probabilities(append_gate(c, g));

        // the permutation derived by the classical corrector undoes it exactly
        const auto op = classical_equivalent(kind, g.qubits, c.measurements);
        std::vector<double> undone(extended.probs.size(), 0.0);
        for (std::size_t i = 0; i < extended.probs.size(); ++i)
            undone[op.apply(i)] += extended.probs[i];
        CHECK(oracle::max_abs_diff(undone, base.probs) < 1e-12);
    }
}

TEST_CASE("sampling a deterministic distribution") {
    ProbabilityVector probs;
    probs.probs = {1.0, 0.0};
    const auto counts = sample(probs, 1024, 99);
    CHECK(counts.entries.at("0") == 1024);
    CHECK(counts.entries.size() == 1);
    CHECK(counts.shots == 1024);
}

TEST_CASE("sampling stays on the distribution's support") {
    ProbabilityVector probs;
    probs.probs = {0.5, 0.0, 0.0, 0.5};
    const auto counts = sample(probs, 1024, 1234);
    std::uint64_t total = 0;
    for (const auto& [key, n] : counts.entries) {
        CHECK((key == "00" || key == "11"));
        total += n;
    }
    CHECK(total == 1024);
}

TEST_CASE("sampling is deterministic under the seed") {
    ProbabilityVector probs;
    probs.probs = {0.25, 0.25, 0.25, 0.25};
    CHECK(sample(probs, 1024, 5) == sample(probs, 1024, 5));
    CHECK(sample(probs, 1024, 5) != sample(probs, 1024, 6));
}
