#include "qobf/gate.hpp"

#include "qobf/error.hpp"

#include <cmath>

namespace qobf {

namespace {

using cd = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;

struct KindInfo {
    GateKind kind;
    std::string_view name;
    std::size_t arity;
    std::size_t params;
    std::size_t controls;
    MeasurementClass cls;
};

constexpr KindInfo kKinds[] = {
    {GateKind::X, "x", 1, 0, 0, MeasurementClass::BasisPermuting},
    {GateKind::Y, "y", 1, 0, 0, MeasurementClass::BasisPermuting},
    {GateKind::Z, "z", 1, 0, 0, MeasurementClass::PhaseOnly},
    {GateKind::H, "h", 1, 0, 0, MeasurementClass::Superposing},
    {GateKind::S, "s", 1, 0, 0, MeasurementClass::PhaseOnly},
    {GateKind::SDG, "sdg", 1, 0, 0, MeasurementClass::PhaseOnly},
    {GateKind::T, "t", 1, 0, 0, MeasurementClass::PhaseOnly},
    {GateKind::TDG, "tdg", 1, 0, 0, MeasurementClass::PhaseOnly},
    {GateKind::RX, "rx", 1, 1, 0, MeasurementClass::Superposing},
    {GateKind::RY, "ry", 1, 1, 0, MeasurementClass::Superposing},
    {GateKind::RZ, "rz", 1, 1, 0, MeasurementClass::PhaseOnly},
    {GateKind::P, "p", 1, 1, 0, MeasurementClass::PhaseOnly},
    {GateKind::CX, "cx", 2, 0, 1, MeasurementClass::BasisPermuting},
    {GateKind::CY, "cy", 2, 0, 1, MeasurementClass::BasisPermuting},
    {GateKind::CZ, "cz", 2, 0, 1, MeasurementClass::PhaseOnly},
    {GateKind::CP, "cp", 2, 1, 1, MeasurementClass::PhaseOnly},
    {GateKind::CS, "cs", 2, 0, 1, MeasurementClass::PhaseOnly},
    {GateKind::SWAP, "swap", 2, 0, 0, MeasurementClass::BasisPermuting},
    {GateKind::CCX, "ccx", 3, 0, 2, MeasurementClass::BasisPermuting},
    {GateKind::CSWAP, "cswap", 3, 0, 1, MeasurementClass::BasisPermuting},
};

const KindInfo& info(GateKind kind) {
    for (const auto& k : kKinds) {
        if (k.kind == kind) return k;
    }
    throw Error("unsupported gate kind");
}

std::vector<cd> single_qubit_matrix(GateKind kind, const std::vector<double>& params) {
    const cd i{0.0, 1.0};
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    switch (kind) {
    case GateKind::X: return {0, 1, 1, 0};
    case GateKind::Y: return {0, -i, i, 0};
    case GateKind::Z: return {1, 0, 0, -1};
    case GateKind::H: return {inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2};
    case GateKind::S: return {1, 0, 0, i};
    case GateKind::SDG: return {1, 0, 0, -i};
    case GateKind::T: return {1, 0, 0, std::exp(i * (kPi / 4.0))};
    case GateKind::TDG: return {1, 0, 0, std::exp(-i * (kPi / 4.0))};
    case GateKind::RX: {
        const double t = params.at(0) / 2.0;
        return {std::cos(t), -i * std::sin(t), -i * std::sin(t), std::cos(t)};
    }
    case GateKind::RY: {
        const double t = params.at(0) / 2.0;
        return {std::cos(t), -std::sin(t), std::sin(t), std::cos(t)};
    }
    case GateKind::RZ: {
        const double t = params.at(0) / 2.0;
        return {std::exp(-i * t), 0, 0, std::exp(i * t)};
    }
    case GateKind::P: return {1, 0, 0, std::exp(i * params.at(0))};
    default: throw Error("not a single-qubit gate");
    }
}

// Adds one control as the new low operand bit: U acts when the control is set.
std::vector<cd> add_control(const std::vector<cd>& u, std::size_t dim) {
    const std::size_t d2 = dim * 2;
    std::vector<cd> out(d2 * d2, cd{0.0, 0.0});
    for (std::size_t r = 0; r < dim; ++r) {
        // control clear: identity on the target subspace
        out[(2 * r) * d2 + (2 * r)] = 1.0;
        for (std::size_t c = 0; c < dim; ++c) {
            out[(2 * r + 1) * d2 + (2 * c + 1)] = u[r * dim + c];
        }
    }
    return out;
}

std::vector<cd> swap_matrix() {
    // local bits: bit0 = first operand, bit1 = second
    std::vector<cd> m(16, cd{0.0, 0.0});
    m[0 * 4 + 0] = 1.0;
    m[1 * 4 + 2] = 1.0;
    m[2 * 4 + 1] = 1.0;
    m[3 * 4 + 3] = 1.0;
    return m;
}

} // namespace

std::size_t arity(GateKind kind) { return info(kind).arity; }
std::size_t param_count(GateKind kind) { return info(kind).params; }
std::size_t num_controls(GateKind kind) { return info(kind).controls; }
MeasurementClass classify(GateKind kind) { return info(kind).cls; }
std::string_view gate_name(GateKind kind) { return info(kind).name; }

std::optional<GateKind> gate_from_name(std::string_view name) {
    if (name == "u1") return GateKind::P;
    for (const auto& k : kKinds) {
        if (k.name == name) return k.kind;
    }
    return std::nullopt;
}

std::vector<cd> unitary(GateKind kind, const std::vector<double>& params) {
    if (params.size() != param_count(kind)) throw Error("parameter count mismatch");
    switch (kind) {
    case GateKind::SWAP: return swap_matrix();
    case GateKind::CSWAP: return add_control(swap_matrix(), 4);
    case GateKind::CX: return add_control(single_qubit_matrix(GateKind::X, {}), 2);
    case GateKind::CY: return add_control(single_qubit_matrix(GateKind::Y, {}), 2);
    case GateKind::CZ: return add_control(single_qubit_matrix(GateKind::Z, {}), 2);
    case GateKind::CS: return add_control(single_qubit_matrix(GateKind::S, {}), 2);
    case GateKind::CP: return add_control(single_qubit_matrix(GateKind::P, params), 2);
    case GateKind::CCX:
        return add_control(add_control(single_qubit_matrix(GateKind::X, {}), 2), 4);
    default: return single_qubit_matrix(kind, params);
    }
}

} // namespace qobf
