#pragma once

#include "qobf/circuit.hpp"
#include "qobf/obfuscate.hpp"

#include <string>
#include <vector>

namespace qobf {

/// Counts <-> {"shots":1024,"counts":{"01001":215,...}}
std::string counts_to_json(const Counts& counts);
Counts counts_from_json(const std::string& json_text);

/// Pool <-> {"0":{"gate":"x"},"6":{"gate":"cp","angle":0.785...}}
std::string pool_to_json(const GatePool& pool);
GatePool pool_from_json(const std::string& json_text);

/// Plan <-> [{"index":3,"qubits":[1,4,3]}, ...]
std::string plan_to_json(const std::vector<InsertionRecord>& plan);
std::vector<InsertionRecord> plan_from_json(const std::string& json_text);

} // namespace qobf
