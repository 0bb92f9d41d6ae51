#pragma once

#include "qobf/circuit.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qobf {

/// One pool entry: a gate kind plus a fixed angle for parameterized kinds.
struct PoolEntry {
    GateKind kind;
    std::optional<double> angle;

    bool operator==(const PoolEntry&) const = default;
};

/// User-fixed index -> gate map constraining what the obfuscator may insert.
/// Superposing kinds (H, RX, RY) are rejected at construction.
struct GatePool {
    std::map<std::size_t, PoolEntry> entries;

    std::size_t max_arity() const;
    bool operator==(const GatePool&) const = default;
};

/// (pool index, operand qubits) — controls first, targets last.
struct InsertionRecord {
    std::size_t gate_index;
    std::vector<std::size_t> qubits;

    bool operator==(const InsertionRecord&) const = default;
};

/// Records in REVERSE insertion order (most recently inserted first).
/// Correction applies them front-to-back.
struct ObfuscationKey {
    std::vector<InsertionRecord> records;

    bool operator==(const ObfuscationKey&) const = default;
};

/// One pool-spec line: (index, gate name, optional fixed angle).
struct PoolSpecEntry {
    std::size_t index;
    std::string name;
    std::optional<double> angle;
};

/// Builds a pool, rejecting duplicate indices, unknown names, Hadamard-family
/// kinds, and angle/parameter mismatches.
GatePool build_pool(const std::vector<PoolSpecEntry>& spec);

/// Validates a record against pool and circuit width; throws Error.
void check_record(const InsertionRecord& record, const GatePool& pool,
                  std::size_t circuit_width);

/// Materializes a record as a gate instance.
GateInstance record_to_gate(const InsertionRecord& record, const GatePool& pool);

/// k records in insertion order: gate index uniform over the pool, operands
/// uniform without replacement from [0, circuit_width). Deterministic under
/// seed.
std::vector<InsertionRecord> random_plan(const GatePool& pool,
                                         std::size_t circuit_width,
                                         std::size_t num_gates,
                                         std::uint64_t seed);

/// As random_plan, but operands are drawn from `allowed_qubits` and pool
/// entries whose arity exceeds the allowed set are skipped. Used by the
/// bench harness to keep encryptor gates on measured qubits.
std::vector<InsertionRecord> random_plan_on(const GatePool& pool,
                                            const std::vector<std::size_t>& allowed_qubits,
                                            std::size_t num_gates,
                                            std::uint64_t seed);

/// Appends the plan's gates (in plan order) before the measurement block and
/// returns the obfuscated circuit plus the key (plan reversed).
std::pair<QuantumCircuit, ObfuscationKey>
obfuscate(const QuantumCircuit& circuit, const GatePool& pool,
          const std::vector<InsertionRecord>& plan);

} // namespace qobf
