#include "qobf/json_io.hpp"

#include "qobf/error.hpp"

#include <json.hpp>

namespace qobf {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw Error("malformed JSON");
    return j;
}

} // namespace

std::string counts_to_json(const Counts& counts) {
    json j;
    j["shots"] = counts.shots;
    j["counts"] = json::object();
    for (const auto& [k, v] : counts.entries) j["counts"][k] = v;
    return j.dump(2) + "\n";
}

Counts counts_from_json(const std::string& json_text) {
    const json j = parse_json(json_text);
    if (!j.is_object() || !j.contains("shots") || !j.contains("counts") ||
        !j["counts"].is_object())
        throw Error("counts JSON must contain \"shots\" and a \"counts\" object");
    Counts counts;
    counts.shots = j["shots"].get<std::uint64_t>();
    std::uint64_t total = 0;
    for (const auto& [k, v] : j["counts"].items()) {
        if (!v.is_number_unsigned()) throw Error("counts values must be non-negative integers");
        counts.entries[k] = v.get<std::uint64_t>();
        total += v.get<std::uint64_t>();
    }
    if (total != counts.shots) throw Error("counts entries do not sum to shots");
    return counts;
}

std::string pool_to_json(const GatePool& pool) {
    json j = json::object();
    for (const auto& [idx, entry] : pool.entries) {
        json e;
        e["gate"] = std::string(gate_name(entry.kind));
        if (entry.angle) e["angle"] = *entry.angle;
        j[std::to_string(idx)] = e;
    }
    return j.dump(2) + "\n";
}

GatePool pool_from_json(const std::string& json_text) {
    const json j = parse_json(json_text);
    if (!j.is_object()) throw Error("pool JSON must be an object");
    std::vector<PoolSpecEntry> spec;
    for (const auto& [key, value] : j.items()) {
        PoolSpecEntry e;
        try {
            e.index = std::stoul(key);
        } catch (const std::exception&) {
            throw Error("pool index '" + key + "' is not an integer");
        }
        if (!value.is_object() || !value.contains("gate") || !value["gate"].is_string())
            throw Error("pool entry must be an object with a \"gate\" name");
        e.name = value["gate"].get<std::string>();
        if (value.contains("angle")) e.angle = value["angle"].get<double>();
        spec.push_back(std::move(e));
    }
    return build_pool(spec);
}

std::string plan_to_json(const std::vector<InsertionRecord>& plan) {
    json j = json::array();
    for (const auto& rec : plan) {
        json e;
        e["index"] = rec.gate_index;
        e["qubits"] = rec.qubits;
        j.push_back(e);
    }
    return j.dump(2) + "\n";
}

std::vector<InsertionRecord> plan_from_json(const std::string& json_text) {
    const json j = parse_json(json_text);
    if (!j.is_array()) throw Error("plan JSON must be an array");
    std::vector<InsertionRecord> plan;
    for (const auto& e : j) {
        if (!e.is_object() || !e.contains("index") || !e.contains("qubits") ||
            !e["qubits"].is_array())
            throw Error("plan entry must contain \"index\" and a \"qubits\" array");
        InsertionRecord rec;
        rec.gate_index = e["index"].get<std::size_t>();
        for (const auto& q : e["qubits"]) rec.qubits.push_back(q.get<std::size_t>());
        plan.push_back(std::move(rec));
    }
    return plan;
}

} // namespace qobf
