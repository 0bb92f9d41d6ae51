#pragma once

#include "qobf/circuit.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace qobf {

/// Desk-scale cap; 2^16 amplitudes = 1 MiB.
inline constexpr std::size_t kMaxQubits = 16;

/// 2^n amplitudes; bit i of the basis index is the state of qubit i.
struct Statevector {
    std::vector<std::complex<double>> amplitudes;
    std::size_t num_qubits = 0;
};

/// 2^m probabilities over the m measured classical bits, indexed by the
/// classical-bit value (bit c of the index = classical bit c).
struct ProbabilityVector {
    std::vector<double> probs;
};

/// Applies one gate in place via stride iteration over the amplitude array.
void apply_gate(Statevector& state, const GateInstance& gate);

/// Simulates the circuit from |0...0>. Throws on invalid circuits or width
/// above kMaxQubits.
Statevector evolve(const QuantumCircuit& circuit);

/// Measurement probabilities routed through the qubit -> classical-bit map;
/// unmeasured qubits are marginalized.
ProbabilityVector probabilities(const Statevector& state,
                                const std::vector<Measurement>& measurements);

/// Convenience: evolve + probabilities for the circuit's own measurement map.
ProbabilityVector circuit_probabilities(const QuantumCircuit& circuit);

/// Multinomial draw of `shots` outcomes, deterministic under (probs, shots,
/// seed); inverse-CDF over the probability vector with a counter-based
/// generator.
Counts sample(const ProbabilityVector& probs, std::uint64_t shots,
              std::uint64_t seed);

} // namespace qobf
