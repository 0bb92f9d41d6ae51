#pragma once

#include "qobf/circuit.hpp"

#include <set>
#include <string>

namespace qobf {

/// Target gate set for decomposition. The default {cx, rz, rx, x, p} is
/// universal for every supported kind.
struct BasisSet {
    std::set<GateKind> allowed;

    static BasisSet default_basis();
    static BasisSet from_names(const std::string& comma_separated);

    bool contains(GateKind kind) const { return allowed.count(kind) != 0; }
};

/// Rewrites every out-of-basis gate via fixed identities (SWAP -> 3 CX,
/// CCX -> the 6-CX T-network, phase gates -> P, H -> RZ/RX sequence, ...).
/// Throws Error if the basis cannot express a required gate. The measurement
/// map is untouched and the probability vector is preserved.
QuantumCircuit decompose(const QuantumCircuit& circuit, const BasisSet& basis);

/// Iterates to fixpoint: adjacent identical self-inverse gates on identical
/// operands cancel; adjacent same-kind rotations/phases on the same qubit
/// merge with angles summed mod 2pi, dropping at zero. Gate count never
/// increases.
QuantumCircuit peephole_optimize(const QuantumCircuit& circuit);

/// decompose then peephole_optimize.
QuantumCircuit transpile(const QuantumCircuit& circuit, const BasisSet& basis,
                         bool optimize = true);

} // namespace qobf
