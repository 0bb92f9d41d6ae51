#include "qobf/transpiler.hpp"

#include "qobf/error.hpp"

#include <cmath>
#include <vector>

namespace qobf {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kAngleEps = 1e-12;

GateInstance g(GateKind kind, std::vector<std::size_t> qubits,
               std::vector<double> params = {}) {
    return GateInstance{kind, std::move(params), std::move(qubits)};
}

// One lowering step toward the canonical set {CX, RZ, RX, X, P}. Gates
// already canonical return an empty vector.
std::vector<GateInstance> lower(const GateInstance& gate) {
    const auto& q = gate.qubits;
    switch (gate.kind) {
    case GateKind::Z: return {g(GateKind::P, {q[0]}, {kPi})};
    case GateKind::S: return {g(GateKind::P, {q[0]}, {kPi / 2})};
    case GateKind::SDG: return {g(GateKind::P, {q[0]}, {-kPi / 2})};
    case GateKind::T: return {g(GateKind::P, {q[0]}, {kPi / 4})};
    case GateKind::TDG: return {g(GateKind::P, {q[0]}, {-kPi / 4})};
    case GateKind::Y: // Y = i X Z: phase then flip
        return {g(GateKind::P, {q[0]}, {kPi}), g(GateKind::X, {q[0]})};
    case GateKind::H: // H = i RZ(pi/2) RX(pi/2) RZ(pi/2)
        return {g(GateKind::RZ, {q[0]}, {kPi / 2}), g(GateKind::RX, {q[0]}, {kPi / 2}),
                g(GateKind::RZ, {q[0]}, {kPi / 2})};
    case GateKind::RY: // RY(t) = RZ(pi/2) RX(t) RZ(-pi/2), exactly
        return {g(GateKind::RZ, {q[0]}, {-kPi / 2}), g(GateKind::RX, {q[0]}, gate.params),
                g(GateKind::RZ, {q[0]}, {kPi / 2})};
    case GateKind::CY: // conjugate the target: CY = (S_t) CX (Sdg_t)
        return {g(GateKind::P, {q[1]}, {-kPi / 2}), g(GateKind::CX, {q[0], q[1]}),
                g(GateKind::P, {q[1]}, {kPi / 2})};
    case GateKind::CZ: return {g(GateKind::CP, {q[0], q[1]}, {kPi})};
    case GateKind::CS: return {g(GateKind::CP, {q[0], q[1]}, {kPi / 2})};
    case GateKind::CP: {
        const double t = gate.params[0];
        return {g(GateKind::CX, {q[0], q[1]}), g(GateKind::P, {q[1]}, {-t / 2}),
                g(GateKind::CX, {q[0], q[1]}), g(GateKind::P, {q[1]}, {t / 2}),
                g(GateKind::P, {q[0]}, {t / 2})};
    }
    case GateKind::SWAP: // three-CNOT identity
        return {g(GateKind::CX, {q[0], q[1]}), g(GateKind::CX, {q[1], q[0]}),
                g(GateKind::CX, {q[0], q[1]})};
    case GateKind::CCX: { // standard T-network, exact
        const std::size_t a = q[0], b = q[1], t = q[2];
        return {g(GateKind::H, {t}),        g(GateKind::CX, {b, t}),
                g(GateKind::TDG, {t}),      g(GateKind::CX, {a, t}),
                g(GateKind::T, {t}),        g(GateKind::CX, {b, t}),
                g(GateKind::TDG, {t}),      g(GateKind::CX, {a, t}),
                g(GateKind::T, {b}),        g(GateKind::T, {t}),
                g(GateKind::H, {t}),        g(GateKind::CX, {a, b}),
                g(GateKind::T, {a}),        g(GateKind::TDG, {b}),
                g(GateKind::CX, {a, b})};
    }
    case GateKind::CSWAP: // Fredkin via Toffoli
        return {g(GateKind::CX, {q[2], q[1]}), g(GateKind::CCX, {q[0], q[1], q[2]}),
                g(GateKind::CX, {q[2], q[1]})};
    default:
        return {}; // canonical
    }
}

void lower_into(const GateInstance& gate, const BasisSet& basis,
                std::vector<GateInstance>& out, int depth) {
    if (depth > 8) throw Error("decomposition did not terminate");
    if (basis.contains(gate.kind)) {
        out.push_back(gate);
        return;
    }
    const auto replacement = lower(gate);
    if (replacement.empty())
        throw Error("basis cannot express required gate '" +
                    std::string(gate_name(gate.kind)) + "'");
    for (const auto& sub : replacement) lower_into(sub, basis, out, depth + 1);
}

bool self_inverse(GateKind kind) {
    switch (kind) {
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::H:
    case GateKind::CX:
    case GateKind::CY:
    case GateKind::CZ:
    case GateKind::SWAP:
    case GateKind::CCX:
    case GateKind::CSWAP:
        return true;
    default:
        return false;
    }
}

bool mergeable_rotation(GateKind kind) {
    switch (kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::P:
    case GateKind::CP:
        return true;
    default:
        return false;
    }
}

bool shares_qubit(const GateInstance& a, const GateInstance& b) {
    for (std::size_t qa : a.qubits)
        for (std::size_t qb : b.qubits)
            if (qa == qb) return true;
    return false;
}

double wrap_angle(double t) {
    t = std::fmod(t, 2 * kPi);
    if (t < 0) t += 2 * kPi;
    return t;
}

bool angle_is_zero(double t) {
    const double w = wrap_angle(t);
    return w < kAngleEps || 2 * kPi - w < kAngleEps;
}

// One pass; true if anything changed. A gate cancels/merges with the next
// gate that touches any of its qubits, provided the operands match.
bool optimize_pass(std::vector<GateInstance>& gates) {
    bool changed = false;
    std::vector<GateInstance> out;
    std::vector<bool> dead(gates.size(), false);
    for (std::size_t i = 0; i < gates.size(); ++i) {
        if (dead[i]) continue;
        auto& cur = gates[i];
        for (std::size_t j = i + 1; j < gates.size(); ++j) {
            if (dead[j]) continue;
            auto& nxt = gates[j];
            if (!shares_qubit(cur, nxt)) continue;
            if (self_inverse(cur.kind) && cur == nxt) {
                dead[i] = dead[j] = true;
                changed = true;
            } else if (mergeable_rotation(cur.kind) && nxt.kind == cur.kind &&
                       nxt.qubits == cur.qubits) {
                cur.params[0] = wrap_angle(cur.params[0] + nxt.params[0]);
                dead[j] = true;
                if (angle_is_zero(cur.params[0])) dead[i] = true;
                changed = true;
                if (dead[i]) break;
                continue; // keep scanning past the merged gate
            }
            break; // blocked by a gate on shared qubits
        }
        if (!dead[i]) out.push_back(std::move(cur));
    }
    gates = std::move(out);
    return changed;
}

} // namespace

BasisSet BasisSet::default_basis() {
    return BasisSet{{GateKind::CX, GateKind::RZ, GateKind::RX, GateKind::X, GateKind::P}};
}

BasisSet BasisSet::from_names(const std::string& comma_separated) {
    BasisSet basis;
    std::size_t start = 0;
    while (start <= comma_separated.size()) {
        std::size_t end = comma_separated.find(',', start);
        if (end == std::string::npos) end = comma_separated.size();
        const std::string name = comma_separated.substr(start, end - start);
        if (!name.empty()) {
            const auto kind = gate_from_name(name);
            if (!kind) throw Error("unknown gate name '" + name + "' in basis");
            basis.allowed.insert(*kind);
        }
        start = end + 1;
    }
    if (basis.allowed.empty()) throw Error("basis is empty");
    return basis;
}

QuantumCircuit decompose(const QuantumCircuit& circuit, const BasisSet& basis) {
    QuantumCircuit out;
    out.num_qubits = circuit.num_qubits;
    out.measurements = circuit.measurements;
    for (const auto& gate : circuit.gates) lower_into(gate, basis, out.gates, 0);
    return out;
}

QuantumCircuit peephole_optimize(const QuantumCircuit& circuit) {
    QuantumCircuit out = circuit;
    while (optimize_pass(out.gates)) {
    }
    return out;
}

QuantumCircuit transpile(const QuantumCircuit& circuit, const BasisSet& basis,
                         bool optimize) {
    QuantumCircuit lowered = decompose(circuit, basis);
    return optimize ? peephole_optimize(lowered) : lowered;
}

} // namespace qobf
