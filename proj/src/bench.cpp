#include "qobf/bench.hpp"

#include "qobf/corrector.hpp"
#include "qobf/error.hpp"
#include "qobf/key_codec.hpp"
#include "qobf/metrics.hpp"
#include "qobf/rng.hpp"
#include "qobf/statevector.hpp"
#include "qobf/transpiler.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qobf {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSoundnessTol = 1e-9;

// Fixed QAOA instance: bipartite 5-node graph (classes {0,2,3} and {1,4}),
// single layer with angles picked so the optimal-cut pair dominates.
// For a disjoint-edge (matching) graph a single QAOA layer is exact at these
// angles: all measurement mass lands uniformly on the optimal cuts.
constexpr double kQaoaGamma = kPi / 4;
constexpr double kQaoaBeta = 3 * kPi / 8;

void add(QuantumCircuit& c, GateKind kind, std::vector<std::size_t> qubits,
         std::vector<double> params = {}) {
    c.gates.push_back({kind, std::move(params), std::move(qubits)});
}

void measure_range(QuantumCircuit& c, std::size_t first, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) c.measurements.push_back({first + i, i});
}

bool secret_bit(const std::string& bits, std::size_t i) {
    return bits[bits.size() - 1 - i] == '1';
}

// Phase flip on |marked> over data qubits [0, n). n == 4 uses `anc`.
void add_marked_phase(QuantumCircuit& c, const std::string& marked, std::size_t n,
                      std::size_t anc) {
    for (std::size_t i = 0; i < n; ++i)
        if (!secret_bit(marked, i)) add(c, GateKind::X, {i});
    switch (n) {
    case 2:
        add(c, GateKind::CZ, {0, 1});
        break;
    case 3:
        add(c, GateKind::H, {2});
        add(c, GateKind::CCX, {0, 1, 2});
        add(c, GateKind::H, {2});
        break;
    case 4:
        add(c, GateKind::CCX, {0, 1, anc});
        add(c, GateKind::H, {3});
        add(c, GateKind::CCX, {anc, 2, 3});
        add(c, GateKind::H, {3});
        add(c, GateKind::CCX, {0, 1, anc});
        break;
    default:
        throw Error("grover instance supports 2 to 4 qubits");
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!secret_bit(marked, i)) add(c, GateKind::X, {i});
}

void add_crz(QuantumCircuit& c, std::size_t ctrl, std::size_t target, double theta) {
    add(c, GateKind::RZ, {target}, {theta / 2});
    add(c, GateKind::CX, {ctrl, target});
    add(c, GateKind::RZ, {target}, {-theta / 2});
    add(c, GateKind::CX, {ctrl, target});
}

void add_cry(QuantumCircuit& c, std::size_t ctrl, std::size_t target, double theta) {
    add(c, GateKind::RY, {target}, {theta / 2});
    add(c, GateKind::CX, {ctrl, target});
    add(c, GateKind::RY, {target}, {-theta / 2});
    add(c, GateKind::CX, {ctrl, target});
}

std::string modal_key(const Counts& counts, bool exclude_zero) {
    const std::string zero(counts.entries.empty() ? 0
                                                  : counts.entries.begin()->first.size(),
                           '0');
    std::string best;
    std::uint64_t best_count = 0;
    for (const auto& [k, v] : counts.entries) {
        if (exclude_zero && k == zero) continue;
        if (v > best_count) { // ties resolve to the lexicographically smallest key
            best = k;
            best_count = v;
        }
    }
    if (best.empty() && !counts.entries.empty()) best = counts.entries.begin()->first;
    return best;
}

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

std::pair<double, double> quartiles_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    if (n < 2) return {v.front(), v.front()};
    const std::vector<double> lower(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n / 2));
    const std::vector<double> upper(v.begin() + static_cast<std::ptrdiff_t>((n + 1) / 2),
                                    v.end());
    return {median_of(lower), median_of(upper)};
}

} // namespace

Benchmark gen_bv(const std::string& secret) {
    const std::size_t n = secret.size();
    if (n == 0 || n > 12) throw Error("secret length must be between 1 and 12");
    for (char c : secret)
        if (c != '0' && c != '1') throw Error("secret must be a bitstring");

    Benchmark bench;
    bench.name = "bv";
    bench.policy = CorrectOutputPolicy::Fixed;
    bench.fixed_output = secret;

    QuantumCircuit& c = bench.circuit;
    c.num_qubits = n + 1;
    const std::size_t anc = n;
    add(c, GateKind::X, {anc});
    for (std::size_t i = 0; i <= n; ++i) add(c, GateKind::H, {i});
    for (std::size_t i = 0; i < n; ++i)
        if (secret_bit(secret, i)) add(c, GateKind::CX, {i, anc});
    for (std::size_t i = 0; i < n; ++i) add(c, GateKind::H, {i});
    measure_range(c, 0, n);
    return bench;
}

Benchmark gen_grover(const std::string& marked, std::size_t iterations) {
    const std::size_t n = marked.size();
    if (n < 2 || n > 4) throw Error("grover instance supports 2 to 4 qubits");
    for (char ch : marked)
        if (ch != '0' && ch != '1') throw Error("marked state must be a bitstring");
    if (iterations == 0) {
        iterations = static_cast<std::size_t>(
            std::llround(kPi / 4.0 * std::sqrt(static_cast<double>(std::size_t{1} << n))));
    }

    Benchmark bench;
    bench.name = "grover";
    bench.policy = CorrectOutputPolicy::Fixed;
    bench.fixed_output = marked;

    QuantumCircuit& c = bench.circuit;
    const bool use_anc = n == 4;
    const std::size_t anc = n; // allocated only for n == 4
    c.num_qubits = n + (use_anc ? 1 : 0);
    const std::string all_zeros(n, '0');

    for (std::size_t i = 0; i < n; ++i) add(c, GateKind::H, {i});
    for (std::size_t it = 0; it < iterations; ++it) {
        add_marked_phase(c, marked, n, anc); // oracle
        for (std::size_t i = 0; i < n; ++i) add(c, GateKind::H, {i});
        add_marked_phase(c, all_zeros, n, anc); // diffuser core: |0..0> phase
        for (std::size_t i = 0; i < n; ++i) add(c, GateKind::H, {i});
    }
    measure_range(c, 0, n);
    return bench;
}

const std::vector<std::pair<std::size_t, std::size_t>>& qaoa_maxcut_edges() {
    // Matching graph on 5 nodes (vertex 2 isolated): every cut separating
    // 0|1 and 3|4 is optimal, including {0,2,3} vs {1,4}.
    static const std::vector<std::pair<std::size_t, std::size_t>> edges = {
        {0, 1}, {3, 4}};
    return edges;
}

Benchmark gen_qaoa_maxcut() {
    Benchmark bench;
    bench.name = "qaoa";
    bench.policy = CorrectOutputPolicy::Modal;

    QuantumCircuit& c = bench.circuit;
    c.num_qubits = 5;
    for (std::size_t i = 0; i < 5; ++i) add(c, GateKind::H, {i});
    for (const auto& [i, j] : qaoa_maxcut_edges()) {
        add(c, GateKind::CX, {i, j});
        add(c, GateKind::RZ, {j}, {2 * kQaoaGamma});
        add(c, GateKind::CX, {i, j});
    }
    for (std::size_t i = 0; i < 5; ++i) add(c, GateKind::RX, {i}, {2 * kQaoaBeta});
    measure_range(c, 0, 5);
    return bench;
}

Benchmark gen_shor15() {
    Benchmark bench;
    bench.name = "shor";
    bench.policy = CorrectOutputPolicy::ModalExcludingZero;

    // counting register: qubits 0..2; target register (value bits): 3..6
    QuantumCircuit& c = bench.circuit;
    c.num_qubits = 7;
    for (std::size_t i = 0; i < 3; ++i) add(c, GateKind::H, {i});
    add(c, GateKind::X, {3}); // target = |1>

    // controlled multiply-by-7 mod 15: complement the value then rotate the
    // value bits up by one (7 = 8 * 14 mod 15; x14 is complement, x8 rotation)
    for (std::size_t t = 3; t <= 6; ++t) add(c, GateKind::CX, {0, t});
    add(c, GateKind::CSWAP, {0, 3, 4});
    add(c, GateKind::CSWAP, {0, 4, 5});
    add(c, GateKind::CSWAP, {0, 5, 6});
    // controlled multiply-by-7^2 = multiply-by-4: rotate value bits up by two
    add(c, GateKind::CSWAP, {1, 3, 5});
    add(c, GateKind::CSWAP, {1, 4, 6});
    // 7^4 = 1 mod 15: counting qubit 2 applies the identity

    // inverse QFT on the counting register
    add(c, GateKind::SWAP, {0, 2});
    add(c, GateKind::H, {0});
    add(c, GateKind::CP, {0, 1}, {-kPi / 2});
    add(c, GateKind::H, {1});
    add(c, GateKind::CP, {0, 2}, {-kPi / 4});
    add(c, GateKind::CP, {1, 2}, {-kPi / 2});
    add(c, GateKind::H, {2});

    // Measure the full register: the counting register (clbits 0-2) carries
    // the phase peaks; the entangled target register widens the measured
    // space so encryptor gates can act on it as well.
    measure_range(c, 0, 7);
    return bench;
}

Benchmark gen_hhl_2x2() {
    Benchmark bench;
    bench.name = "hhl";
    bench.policy = CorrectOutputPolicy::Modal;

    // A = [[1, -1/3], [-1/3, 1]], b = (0, 1). Eigenvalues 2/3 and 4/3 map to
    // clock values 1 and 2 exactly with evolution time t0.
    const double t0 = 3 * kPi / 4;

    // q0 solution, q1/q2 clock, q3 ancilla
    QuantumCircuit& c = bench.circuit;
    c.num_qubits = 4;
    add(c, GateKind::X, {0}); // b = |1>
    add(c, GateKind::H, {1});
    add(c, GateKind::H, {2});

    // controlled e^{iAt0 k}: controlled global phase + H-conjugated CRZ
    const auto controlled_evolution = [&](std::size_t ctrl, double k) {
        add(c, GateKind::P, {ctrl}, {k * t0});
        add(c, GateKind::H, {0});
        add_crz(c, ctrl, 0, 2 * t0 * k / 3);
        add(c, GateKind::H, {0});
    };
    controlled_evolution(1, 1.0);
    controlled_evolution(2, 2.0);

    // inverse QFT on the clock
    add(c, GateKind::SWAP, {1, 2});
    add(c, GateKind::H, {1});
    add(c, GateKind::CP, {1, 2}, {-kPi / 2});
    add(c, GateKind::H, {2});

    // eigenvalue inversion: rotation angle 2*arcsin(C/lambda), C = 1
    add_cry(c, 1, 3, kPi);
    add_cry(c, 2, 3, 2 * std::asin(0.5));

    // uncompute QPE
    add(c, GateKind::H, {2});
    add(c, GateKind::CP, {1, 2}, {kPi / 2});
    add(c, GateKind::H, {1});
    add(c, GateKind::SWAP, {1, 2});
    const auto controlled_evolution_inv = [&](std::size_t ctrl, double k) {
        add(c, GateKind::H, {0});
        add_crz(c, ctrl, 0, -2 * t0 * k / 3);
        add(c, GateKind::H, {0});
        add(c, GateKind::P, {ctrl}, {-k * t0});
    };
    controlled_evolution_inv(2, 2.0);
    controlled_evolution_inv(1, 1.0);
    add(c, GateKind::H, {1});
    add(c, GateKind::H, {2});

    // Measure the full register: the clock uncomputes to |00> exactly, so
    // clbits 1-2 are deterministic and post-selection reads clbit 3.
    c.measurements = {{0, 0}, {1, 1}, {2, 2}, {3, 3}};
    return bench;
}

Benchmark benchmark_by_name(const std::string& algo) {
    if (algo == "bv") return gen_bv("11010");
    if (algo == "grover") return gen_grover("101", 2);
    if (algo == "qaoa") return gen_qaoa_maxcut();
    if (algo == "shor") return gen_shor15();
    if (algo == "hhl") return gen_hhl_2x2();
    throw Error("unknown algorithm '" + algo + "'");
}

GatePool default_pool() {
    return build_pool({{0, "x", {}},
                       {1, "cx", {}},
                       {2, "swap", {}},
                       {3, "ccx", {}},
                       {4, "cswap", {}},
                       {5, "s", {}}});
}

TrialResult run_trial(const Benchmark& bench, const GatePool& pool,
                      std::size_t num_gates, std::uint64_t shots,
                      std::uint64_t seed) {
    TrialResult trial;
    trial.seed = seed;
    const std::uint64_t sample_seed = CounterRng::derive(seed, 0);
    const std::uint64_t plan_seed = CounterRng::derive(seed, 1);

    const ProbabilityVector orig_probs = circuit_probabilities(bench.circuit);
    const Counts orig_counts = sample(orig_probs, shots, sample_seed);

    switch (bench.policy) {
    case CorrectOutputPolicy::Fixed:
        trial.correct_output = bench.fixed_output;
        break;
    case CorrectOutputPolicy::Modal:
        trial.correct_output = modal_key(orig_counts, false);
        break;
    case CorrectOutputPolicy::ModalExcludingZero:
        trial.correct_output = modal_key(orig_counts, true);
        break;
    }

    std::vector<std::size_t> measured;
    for (const auto& m : bench.circuit.measurements) measured.push_back(m.qubit);
    std::sort(measured.begin(), measured.end());

    std::vector<InsertionRecord> plan;
    if (num_gates > 0) plan = random_plan_on(pool, measured, num_gates, plan_seed);

    const auto [obf_circuit, key] = obfuscate(bench.circuit, pool, plan);
    const QuantumCircuit compiled = transpile(obf_circuit, BasisSet::default_basis());
    const ProbabilityVector obf_probs = circuit_probabilities(compiled);
    const Counts obf_counts = sample(obf_probs, shots, sample_seed); // paired seed

    trial.key = encode_key(key);
    trial.tvd = tvd(orig_counts, obf_counts);
    trial.dfc = dfc(obf_counts, trial.correct_output);

    const auto corrected =
        correct_distribution(obf_probs.probs, key, pool, bench.circuit.measurements);
    double max_diff = 0.0;
    for (std::size_t i = 0; i < corrected.size(); ++i)
        max_diff = std::max(max_diff, std::abs(corrected[i] - orig_probs.probs[i]));
    trial.sound = max_diff < kSoundnessTol;
    return trial;
}

ExperimentResult run_experiment(const Benchmark& bench, std::size_t trials,
                                std::uint64_t shots, std::size_t num_gates,
                                const GatePool& pool, std::uint64_t master_seed) {
    if (trials == 0) throw Error("trials must be at least 1");

    ExperimentResult result;
    std::vector<double> tvds, dfcs;
    bool all_sound = true;
    for (std::size_t t = 0; t < trials; ++t) {
        TrialResult trial;
        try {
            trial = run_trial(bench, pool, num_gates, shots,
                              CounterRng::derive(master_seed, t));
        } catch (const Error& e) {
            throw Error("trial " + std::to_string(t) + ": " + e.what());
        }
        trial.trial_index = t;
        tvds.push_back(trial.tvd);
        dfcs.push_back(trial.dfc);
        all_sound &= trial.sound;
        result.trials.push_back(std::move(trial));
    }

    auto& s = result.summary;
    s.algorithm = bench.name;
    s.trials = trials;
    s.median_tvd = median_of(tvds);
    s.median_dfc = median_of(dfcs);
    std::tie(s.q1_tvd, s.q3_tvd) = quartiles_of(tvds);
    std::tie(s.q1_dfc, s.q3_dfc) = quartiles_of(dfcs);
    s.correction_soundness = all_sound;
    return result;
}

std::string trials_to_csv(const std::vector<TrialResult>& trials) {
    std::vector<const TrialResult*> sorted;
    for (const auto& t : trials) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(),
              [](const TrialResult* a, const TrialResult* b) {
                  return a->trial_index < b->trial_index;
              });
    std::ostringstream out;
    out << "trial,tvd,dfc,key\n";
    out.precision(17);
    for (const auto* t : sorted)
        out << t->trial_index << ',' << t->tvd << ',' << t->dfc << ',' << t->key << '\n';
    return out.str();
}

std::string summary_to_json(const ExperimentSummary& summary) {
    nlohmann::json j;
    j["algorithm"] = summary.algorithm;
    j["trials"] = summary.trials;
    j["median_tvd"] = summary.median_tvd;
    j["median_dfc"] = summary.median_dfc;
    j["q1_tvd"] = summary.q1_tvd;
    j["q3_tvd"] = summary.q3_tvd;
    j["q1_dfc"] = summary.q1_dfc;
    j["q3_dfc"] = summary.q3_dfc;
    j["correction_soundness"] = summary.correction_soundness;
    return j.dump(2) + "\n";
}

} // namespace qobf
