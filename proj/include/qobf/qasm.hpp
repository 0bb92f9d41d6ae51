#pragma once

#include "qobf/circuit.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qobf {

struct SourceSpan {
    std::size_t line = 1;   // 1-based
    std::size_t column = 1; // 1-based
    std::size_t length = 0;
};

struct ParseDiagnostic {
    SourceSpan span;
    std::string message;
    enum class Severity { Error, Warning } severity = Severity::Error;
};

/// Outcome of parsing: a circuit on success (warnings possible either way).
struct ParseResult {
    std::optional<QuantumCircuit> circuit;
    std::vector<ParseDiagnostic> diagnostics;

    bool ok() const { return circuit.has_value(); }
};

/// Parses the supported OpenQASM 2.0 subset. Never throws on malformed
/// input; all failures surface as diagnostics. Barriers are parsed and
/// discarded with a warning.
ParseResult parse_qasm(const std::string& source);

/// Canonical OpenQASM text, one statement per line, angles printed with 17
/// significant digits. parse_qasm(emit_qasm(c)) reproduces c exactly.
std::string emit_qasm(const QuantumCircuit& circuit);

} // namespace qobf
