#include "qobf/corrector.hpp"

#include "qobf/error.hpp"

#include <optional>

namespace qobf {

namespace {

std::optional<std::size_t> clbit_of(std::size_t qubit,
                                    const std::vector<Measurement>& measurements) {
    for (const auto& m : measurements)
        if (m.qubit == qubit) return m.clbit;
    return std::nullopt;
}

} // namespace

std::size_t ClassicalOp::apply(std::size_t bits) const {
    switch (variant) {
    case Variant::Identity:
        return bits;
    case Variant::Flip:
        return bits ^ (std::size_t{1} << targets[0]);
    case Variant::CondFlip:
        for (std::size_t c : controls)
            if (!(bits >> c & 1)) return bits;
        return bits ^ (std::size_t{1} << targets[0]);
    case Variant::Swap:
    case Variant::CondSwap: {
        if (variant == Variant::CondSwap && !(bits >> controls[0] & 1)) return bits;
        const bool a = bits >> targets[0] & 1;
        const bool b = bits >> targets[1] & 1;
        if (a == b) return bits;
        return bits ^ (std::size_t{1} << targets[0]) ^ (std::size_t{1} << targets[1]);
    }
    }
    return bits;
}

ClassicalOp classical_equivalent(GateKind kind, const std::vector<std::size_t>& operands,
                                 const std::vector<Measurement>& measurements) {
    if (classify(kind) == MeasurementClass::Superposing)
        throw Error("superposing gate has no classical equivalent");

    ClassicalOp op;
    if (classify(kind) == MeasurementClass::PhaseOnly) return op; // Identity

    const std::size_t n_ctrl = num_controls(kind);
    std::vector<std::size_t> target_qubits(operands.begin() +
                                               static_cast<std::ptrdiff_t>(n_ctrl),
                                           operands.end());

    // Unmeasured target: the corruption never reached the classical record.
    std::vector<std::size_t> target_bits;
    for (std::size_t q : target_qubits) {
        const auto c = clbit_of(q, measurements);
        if (!c) return op; // degrade to Identity
        target_bits.push_back(*c);
    }

    std::vector<std::size_t> control_bits;
    for (std::size_t i = 0; i < n_ctrl; ++i) {
        const auto c = clbit_of(operands[i], measurements);
        if (!c)
            throw Error("uncorrectable record: control qubit " +
                        std::to_string(operands[i]) + " is unmeasured");
        control_bits.push_back(*c);
    }

    const bool is_swap = kind == GateKind::SWAP || kind == GateKind::CSWAP;
    if (is_swap) {
        op.variant = n_ctrl ? ClassicalOp::Variant::CondSwap : ClassicalOp::Variant::Swap;
    } else {
        op.variant = n_ctrl ? ClassicalOp::Variant::CondFlip : ClassicalOp::Variant::Flip;
    }
    op.controls = std::move(control_bits);
    op.targets = std::move(target_bits);
    return op;
}

std::vector<ClassicalOp> correction_ops(const ObfuscationKey& key, const GatePool& pool,
                                        const std::vector<Measurement>& measurements) {
    std::vector<ClassicalOp> ops;
    ops.reserve(key.records.size());
    for (const auto& rec : key.records) {
        const auto it = pool.entries.find(rec.gate_index);
        if (it == pool.entries.end())
            throw Error("unknown gate index " + std::to_string(rec.gate_index));
        ops.push_back(classical_equivalent(it->second.kind, rec.qubits, measurements));
    }
    return ops;
}

std::string correct_bitstring(const std::string& bits, const ObfuscationKey& key,
                              const GatePool& pool,
                              const std::vector<Measurement>& measurements) {
    if (bits.size() != measurements.size())
        throw Error("bitstring length does not match the classical register");
    std::size_t value = parse_bits(bits);
    for (const auto& op : correction_ops(key, pool, measurements))
        value = op.apply(value);
    return render_bits(value, bits.size());
}

Counts correct_counts(const Counts& counts, const ObfuscationKey& key,
                      const GatePool& pool,
                      const std::vector<Measurement>& measurements) {
    const auto ops = correction_ops(key, pool, measurements);
    Counts out;
    out.shots = counts.shots;
    for (const auto& [bits, n] : counts.entries) {
        if (bits.size() != measurements.size())
            throw Error("bitstring length does not match the classical register");
        std::size_t value = parse_bits(bits);
        for (const auto& op : ops) value = op.apply(value);
        out.entries[render_bits(value, bits.size())] += n;
    }
    return out;
}

std::vector<double> correct_distribution(const std::vector<double>& probs,
                                         const ObfuscationKey& key,
                                         const GatePool& pool,
                                         const std::vector<Measurement>& measurements) {
    const auto ops = correction_ops(key, pool, measurements);
    std::vector<double> out(probs.size(), 0.0);
    for (std::size_t idx = 0; idx < probs.size(); ++idx) {
        std::size_t value = idx;
        for (const auto& op : ops) value = op.apply(value);
        out[value] += probs[idx];
    }
    return out;
}

} // namespace qobf
