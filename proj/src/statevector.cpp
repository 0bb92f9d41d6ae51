#include "qobf/statevector.hpp"

#include "qobf/error.hpp"
#include "qobf/rng.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace qobf {

namespace {

double norm_sq(const Statevector& state) {
    double s = 0.0;
    for (const auto& a : state.amplitudes) s += std::norm(a);
    return s;
}

} // namespace

void apply_gate(Statevector& state, const GateInstance& gate) {
    const std::size_t a = arity(gate.kind);
    const auto u = unitary(gate.kind, gate.params);
    const std::size_t dim = std::size_t{1} << a;
    const std::size_t n = state.num_qubits;

    // Iterate over all assignments of the non-operand qubits; for each,
    // gather the dim amplitudes addressed by the operand bits and apply u.
    std::size_t operand_mask = 0;
    for (std::size_t q : gate.qubits) operand_mask |= std::size_t{1} << q;

    std::vector<std::size_t> offsets(dim);
    for (std::size_t local = 0; local < dim; ++local) {
        std::size_t off = 0;
        for (std::size_t j = 0; j < a; ++j) {
            if (local >> j & 1) off |= std::size_t{1} << gate.qubits[j];
        }
        offsets[local] = off;
    }

    std::vector<std::complex<double>> scratch(dim);
    const std::size_t total = std::size_t{1} << n;
    for (std::size_t base = 0; base < total; ++base) {
        if (base & operand_mask) continue; // only visit operand-bits-clear bases
        for (std::size_t l = 0; l < dim; ++l)
            scratch[l] = state.amplitudes[base | offsets[l]];
        for (std::size_t r = 0; r < dim; ++r) {
            std::complex<double> acc{0.0, 0.0};
            for (std::size_t c = 0; c < dim; ++c) acc += u[r * dim + c] * scratch[c];
            state.amplitudes[base | offsets[r]] = acc;
        }
    }
    assert(std::abs(norm_sq(state) - 1.0) < 1e-10);
}

Statevector evolve(const QuantumCircuit& circuit) {
    if (circuit.num_qubits > kMaxQubits)
        throw Error("circuit exceeds the " + std::to_string(kMaxQubits) + "-qubit cap");
    if (const auto report = validate(circuit); !report.empty())
        throw Error("invalid circuit: " + report.front().message);

    Statevector state;
    state.num_qubits = circuit.num_qubits;
    state.amplitudes.assign(std::size_t{1} << circuit.num_qubits, {0.0, 0.0});
    state.amplitudes[0] = 1.0;
    for (const auto& gate : circuit.gates) apply_gate(state, gate);
    return state;
}

ProbabilityVector probabilities(const Statevector& state,
                                const std::vector<Measurement>& measurements) {
    const std::size_t m = measurements.size();
    ProbabilityVector out;
    out.probs.assign(std::size_t{1} << m, 0.0);
    for (std::size_t idx = 0; idx < state.amplitudes.size(); ++idx) {
        const double p = std::norm(state.amplitudes[idx]);
        if (p == 0.0) continue;
        std::size_t key = 0;
        for (const auto& meas : measurements) {
            if (idx >> meas.qubit & 1) key |= std::size_t{1} << meas.clbit;
        }
        out.probs[key] += p;
    }
    return out;
}

ProbabilityVector circuit_probabilities(const QuantumCircuit& circuit) {
    return probabilities(evolve(circuit), circuit.measurements);
}

Counts sample(const ProbabilityVector& probs, std::uint64_t shots,
              std::uint64_t seed) {
    if (shots == 0) throw Error("sample: shots must be positive");
    const std::size_t m_bits = [&] {
        std::size_t b = 0;
        while ((std::size_t{1} << b) < probs.probs.size()) ++b;
        return b;
    }();

    std::vector<double> cdf(probs.probs.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < probs.probs.size(); ++i) {
        acc += probs.probs[i];
        cdf[i] = acc;
    }

    Counts counts;
    counts.shots = shots;
    CounterRng rng(seed);
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        const double u = rng.next_double() * acc;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        std::size_t idx = static_cast<std::size_t>(it - cdf.begin());
        if (idx >= probs.probs.size()) idx = probs.probs.size() - 1;
        // never emit a zero-probability outcome off a CDF plateau
        while (idx > 0 && probs.probs[idx] == 0.0) --idx;
        counts.entries[render_bits(idx, m_bits)] += 1;
    }
    return counts;
}

} // namespace qobf
