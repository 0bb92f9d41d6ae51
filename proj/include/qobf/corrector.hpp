#pragma once

#include "qobf/obfuscate.hpp"

#include <string>
#include <vector>

namespace qobf {

/// Measurement-level equivalent of an encryptor gate. Bit positions are
/// classical-bit indices; every variant is an involution on {0,1}^m.
struct ClassicalOp {
    enum class Variant { Identity, Flip, CondFlip, Swap, CondSwap } variant =
        Variant::Identity;
    std::vector<std::size_t> controls; // classical control bits (CondFlip/CondSwap)
    std::vector<std::size_t> targets;  // flipped bit, or the two swapped bits

    /// Applies the op to the classical-bit value `bits` (bit c = clbit c).
    std::size_t apply(std::size_t bits) const;
};

/// Derives the classical equivalent of a pool gate on the given operands,
/// routing qubits through the measurement map. Phase-only kinds give
/// Identity; an unmeasured target (or swapped qubit) degrades to Identity;
/// an unmeasured control is an error (the condition was never observed).
ClassicalOp classical_equivalent(GateKind kind, const std::vector<std::size_t>& operands,
                                 const std::vector<Measurement>& measurements);

/// The full correction sequence for a key: one op per record, in key order
/// (front-to-back = reverse insertion order).
std::vector<ClassicalOp> correction_ops(const ObfuscationKey& key, const GatePool& pool,
                                        const std::vector<Measurement>& measurements);

/// Corrects one measured bitstring (rendered bit 0 rightmost).
std::string correct_bitstring(const std::string& bits, const ObfuscationKey& key,
                              const GatePool& pool,
                              const std::vector<Measurement>& measurements);

/// Maps every histogram key through correct_bitstring; shot totals are
/// conserved exactly.
Counts correct_counts(const Counts& counts, const ObfuscationKey& key,
                      const GatePool& pool,
                      const std::vector<Measurement>& measurements);

/// Pushes a probability vector over the classical register (index bit c =
/// clbit c) through the composite correction bijection.
std::vector<double> correct_distribution(const std::vector<double>& probs,
                                         const ObfuscationKey& key,
                                         const GatePool& pool,
                                         const std::vector<Measurement>& measurements);

} // namespace qobf
