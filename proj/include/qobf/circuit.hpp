#pragma once

#include "qobf/gate.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace qobf {

/// One applied gate. Operand order: controls first, targets last; for
/// SWAP/CSWAP the exchanged qubits are the final two operands.
struct GateInstance {
    GateKind kind;
    std::vector<double> params;
    std::vector<std::size_t> qubits;

    bool operator==(const GateInstance&) const = default;
};

/// Maps qubit `qubit` to classical bit `clbit`. Measurement is terminal.
struct Measurement {
    std::size_t qubit;
    std::size_t clbit;

    bool operator==(const Measurement&) const = default;
};

/// Ordered gate list over a fixed-width register plus a terminal measurement
/// block. Immutable by convention: passes return transformed copies.
struct QuantumCircuit {
    std::size_t num_qubits = 0;
    std::vector<GateInstance> gates;
    std::vector<Measurement> measurements;

    std::size_t num_clbits() const { return measurements.size(); }

    bool operator==(const QuantumCircuit&) const = default;
};

/// Histogram of measured bitstrings. Keys render classical bit 0 as the
/// RIGHTMOST character.
struct Counts {
    std::map<std::string, std::uint64_t> entries;
    std::uint64_t shots = 0;

    bool operator==(const Counts&) const = default;
};

/// Checks the gate against the circuit's width and appends it immediately
/// before the measurement block. Throws Error on operand violations.
QuantumCircuit append_gate(const QuantumCircuit& circuit, const GateInstance& gate);

/// One invariant violation found by validate().
struct Violation {
    std::string message;
    std::size_t position; // gate or measurement index the violation refers to
};

/// Empty result iff all QuantumCircuit invariants hold.
std::vector<Violation> validate(const QuantumCircuit& circuit);

/// Renders a classical-bit index as a bitstring of `width` characters,
/// bit 0 rightmost.
std::string render_bits(std::size_t value, std::size_t width);

/// Inverse of render_bits; throws Error on non-binary input.
std::size_t parse_bits(const std::string& bits);

} // namespace qobf
