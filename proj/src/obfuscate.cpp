#include "qobf/obfuscate.hpp"

#include "qobf/error.hpp"
#include "qobf/rng.hpp"

#include <algorithm>
#include <set>

namespace qobf {

std::size_t GatePool::max_arity() const {
    std::size_t m = 0;
    for (const auto& [idx, entry] : entries) m = std::max(m, arity(entry.kind));
    return m;
}

GatePool build_pool(const std::vector<PoolSpecEntry>& spec) {
    GatePool pool;
    for (const auto& e : spec) {
        const auto kind = gate_from_name(e.name);
        if (!kind) throw Error("unknown gate name '" + e.name + "'");
        if (classify(*kind) == MeasurementClass::Superposing)
            throw Error("gate '" + e.name +
                        "' is excluded from pools (introduces superposition)");
        if (param_count(*kind) == 1 && !e.angle)
            throw Error("gate '" + e.name + "' requires a fixed angle");
        if (param_count(*kind) == 0 && e.angle)
            throw Error("gate '" + e.name + "' takes no angle");
        if (!pool.entries.emplace(e.index, PoolEntry{*kind, e.angle}).second)
            throw Error("duplicate pool index " + std::to_string(e.index));
    }
    return pool;
}

void check_record(const InsertionRecord& record, const GatePool& pool,
                  std::size_t circuit_width) {
    const auto it = pool.entries.find(record.gate_index);
    if (it == pool.entries.end())
        throw Error("unknown gate index " + std::to_string(record.gate_index));
    if (record.qubits.size() != arity(it->second.kind))
        throw Error("arity mismatch for gate index " + std::to_string(record.gate_index));
    std::set<std::size_t> seen;
    for (std::size_t q : record.qubits) {
        if (q >= circuit_width) throw Error("qubit index out of range");
        if (!seen.insert(q).second) throw Error("duplicate qubit in operand list");
    }
}

GateInstance record_to_gate(const InsertionRecord& record, const GatePool& pool) {
    const auto& entry = pool.entries.at(record.gate_index);
    GateInstance gate;
    gate.kind = entry.kind;
    if (entry.angle) gate.params.push_back(*entry.angle);
    gate.qubits = record.qubits;
    return gate;
}

namespace {

std::vector<InsertionRecord> draw_plan(const GatePool& pool,
                                       const std::vector<std::size_t>& qubits,
                                       std::size_t num_gates, std::uint64_t seed,
                                       bool skip_oversized) {
    if (pool.entries.empty()) throw Error("gate pool is empty");
    std::vector<std::size_t> indices;
    for (const auto& [idx, entry] : pool.entries) {
        if (arity(entry.kind) > qubits.size()) {
            if (skip_oversized) continue;
            throw Error("pool gate index " + std::to_string(idx) +
                        " needs more qubits than the circuit provides");
        }
        indices.push_back(idx);
    }
    if (indices.empty()) throw Error("no pool gate fits the available qubits");

    CounterRng rng(seed);
    std::vector<InsertionRecord> plan;
    plan.reserve(num_gates);
    for (std::size_t g = 0; g < num_gates; ++g) {
        InsertionRecord rec;
        rec.gate_index = indices[rng.next_below(indices.size())];
        const std::size_t a = arity(pool.entries.at(rec.gate_index).kind);
        // without replacement
        std::vector<std::size_t> remaining = qubits;
        for (std::size_t j = 0; j < a; ++j) {
            const std::size_t pick = rng.next_below(remaining.size());
            rec.qubits.push_back(remaining[pick]);
            remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
        }
        plan.push_back(std::move(rec));
    }
    return plan;
}

} // namespace

std::vector<InsertionRecord> random_plan(const GatePool& pool,
                                         std::size_t circuit_width,
                                         std::size_t num_gates, std::uint64_t seed) {
    if (num_gates == 0) throw Error("num_gates must be at least 1");
    std::vector<std::size_t> all(circuit_width);
    for (std::size_t i = 0; i < circuit_width; ++i) all[i] = i;
    return draw_plan(pool, all, num_gates, seed, /*skip_oversized=*/false);
}

std::vector<InsertionRecord> random_plan_on(const GatePool& pool,
                                            const std::vector<std::size_t>& allowed_qubits,
                                            std::size_t num_gates, std::uint64_t seed) {
    if (num_gates == 0) throw Error("num_gates must be at least 1");
    return draw_plan(pool, allowed_qubits, num_gates, seed, /*skip_oversized=*/true);
}

std::pair<QuantumCircuit, ObfuscationKey>
obfuscate(const QuantumCircuit& circuit, const GatePool& pool,
          const std::vector<InsertionRecord>& plan) {
    QuantumCircuit out = circuit;
    for (const auto& rec : plan) {
        check_record(rec, pool, circuit.num_qubits);
        out = append_gate(out, record_to_gate(rec, pool));
    }
    ObfuscationKey key;
    key.records.assign(plan.rbegin(), plan.rend());
    return {std::move(out), std::move(key)};
}

} // namespace qobf
