#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qobf {

/// Supported gate kinds. Controls always precede targets in operand lists;
/// for SWAP/CSWAP the exchanged qubits are the final two operands.
enum class GateKind {
    X, Y, Z, H, S, SDG, T, TDG,
    RX, RY, RZ, P,
    CX, CY, CZ, CP, CS,
    SWAP, CCX, CSWAP,
};

/// How a gate affects computational-basis measurement statistics.
///  - BasisPermuting: unitary is a permutation matrix up to per-entry phases;
///    its effect on measured bitstrings is a classical bit permutation/flip.
///  - PhaseOnly: diagonal unitary; invisible to measurement.
///  - Superposing: creates superposition; not classically correctable.
enum class MeasurementClass { BasisPermuting, PhaseOnly, Superposing };

std::size_t arity(GateKind kind);
std::size_t param_count(GateKind kind);
std::size_t num_controls(GateKind kind);
MeasurementClass classify(GateKind kind);

/// Lowercase OpenQASM mnemonic ("x", "cx", "cswap", ...).
std::string_view gate_name(GateKind kind);

/// Resolves a lowercase mnemonic; "u1" is accepted as an alias of "p".
std::optional<GateKind> gate_from_name(std::string_view name);

/// Dense unitary of the gate, row-major, dimension 2^arity. Local basis
/// index bit j is the state of operand j (controls occupy the low bits).
std::vector<std::complex<double>> unitary(GateKind kind,
                                          const std::vector<double>& params);

} // namespace qobf
