#pragma once

#include "qobf/obfuscate.hpp"

#include <string>

namespace qobf {

/// Serializes the key in record order (already LIFO): records joined by '@',
/// index and qubits separated by '#', qubits separated by '|'.
/// Example: "2#2|1@5#1@1#2|3". The empty key encodes to "".
std::string encode_key(const ObfuscationKey& key);

/// Strict inverse of encode_key. Validates every record against the pool and
/// circuit width; throws Error with a character offset on syntax errors.
ObfuscationKey decode_key(const std::string& text, const GatePool& pool,
                          std::size_t circuit_width);

} // namespace qobf
