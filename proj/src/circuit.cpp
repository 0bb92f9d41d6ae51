#include "qobf/circuit.hpp"

#include "qobf/error.hpp"

#include <set>
#include <string>

namespace qobf {

namespace {

void check_gate(const GateInstance& gate, std::size_t width) {
    if (gate.qubits.size() != arity(gate.kind))
        throw Error("arity mismatch for gate '" + std::string(gate_name(gate.kind)) + "'");
    if (gate.params.size() != param_count(gate.kind))
        throw Error("parameter count mismatch for gate '" +
                    std::string(gate_name(gate.kind)) + "'");
    std::set<std::size_t> seen;
    for (std::size_t q : gate.qubits) {
        if (q >= width) throw Error("qubit index out of range");
        if (!seen.insert(q).second) throw Error("duplicate qubit in operand list");
    }
}

} // namespace

QuantumCircuit append_gate(const QuantumCircuit& circuit, const GateInstance& gate) {
    check_gate(gate, circuit.num_qubits);
    QuantumCircuit out = circuit;
    out.gates.push_back(gate);
    return out;
}

std::vector<Violation> validate(const QuantumCircuit& circuit) {
    std::vector<Violation> report;
    if (circuit.num_qubits == 0)
        report.push_back({"circuit must have at least one qubit", 0});

    for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
        const auto& g = circuit.gates[i];
        if (g.qubits.size() != arity(g.kind)) {
            report.push_back({"arity mismatch", i});
            continue;
        }
        if (g.params.size() != param_count(g.kind))
            report.push_back({"parameter count mismatch", i});
        std::set<std::size_t> seen;
        for (std::size_t q : g.qubits) {
            if (q >= circuit.num_qubits) report.push_back({"qubit index out of range", i});
            if (!seen.insert(q).second) report.push_back({"duplicate qubit in operand list", i});
        }
    }

    std::set<std::size_t> measured_qubits;
    std::set<std::size_t> written_clbits;
    for (std::size_t i = 0; i < circuit.measurements.size(); ++i) {
        const auto& m = circuit.measurements[i];
        if (m.qubit >= circuit.num_qubits)
            report.push_back({"measured qubit out of range", i});
        if (!measured_qubits.insert(m.qubit).second)
            report.push_back({"qubit measured more than once", i});
        if (!written_clbits.insert(m.clbit).second)
            report.push_back({"classical bit reuse", i});
    }
    for (std::size_t c = 0; c < circuit.measurements.size(); ++c) {
        if (!written_clbits.count(c)) {
            report.push_back({"classical bits not contiguous from 0", c});
            break;
        }
    }
    return report;
}

std::string render_bits(std::size_t value, std::size_t width) {
    std::string out(width, '0');
    for (std::size_t i = 0; i < width; ++i) {
        if (value >> i & 1) out[width - 1 - i] = '1';
    }
    return out;
}

std::size_t parse_bits(const std::string& bits) {
    std::size_t value = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        const char c = bits[bits.size() - 1 - i];
        if (c == '1') value |= std::size_t{1} << i;
        else if (c != '0') throw Error("bitstring contains non-binary character");
    }
    return value;
}

} // namespace qobf
