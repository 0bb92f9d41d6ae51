#pragma once

#include "qobf/circuit.hpp"
#include "qobf/obfuscate.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qobf {

/// How the reference ("correct") output of a benchmark is determined.
/// Deterministic algorithms fix it; the rest use the modal bitstring of the
/// unobfuscated run at the same shots/seed.
enum class CorrectOutputPolicy { Fixed, Modal, ModalExcludingZero };

struct Benchmark {
    std::string name;
    QuantumCircuit circuit;
    CorrectOutputPolicy policy = CorrectOutputPolicy::Modal;
    std::string fixed_output; // when policy == Fixed
};

/// Bernstein-Vazirani for the given secret (bit 0 rightmost); one ancilla
/// qubit, data qubits measured. Yields the secret with probability 1.
Benchmark gen_bv(const std::string& secret);

/// Grover search for `marked` over 2..4 qubits (4-qubit instances use one
/// ancilla for the multi-controlled phase). iterations == 0 picks
/// round(pi/4 * sqrt(2^n)).
Benchmark gen_grover(const std::string& marked, std::size_t iterations = 0);

/// Single-layer QAOA for MaxCut on a fixed 5-node matching graph whose
/// optimal cuts include {0,2,3} | {1,4}; the fixed angles are exact for this
/// graph, so all measured mass lands on optimal cuts.
Benchmark gen_qaoa_maxcut();
const std::vector<std::pair<std::size_t, std::size_t>>& qaoa_maxcut_edges();

/// Order finding for a=7, N=15: 3-bit counting register + 4-bit target built
/// from controlled modular-multiplication permutations. The full register is
/// measured; the counting-register marginal (clbits 0-2) peaks at {0,2,4,6}/8
/// (order r=4).
Benchmark gen_shor15();

/// Small HHL for A=[[1,-1/3],[-1/3,1]], b=(0,1): 1 solution qubit, 2 clock
/// qubits, 1 ancilla. The full register is measured; the clock uncomputes to
/// |00> exactly, and post-selecting the ancilla bit reads off the solution.
Benchmark gen_hhl_2x2();

Benchmark benchmark_by_name(const std::string& algo);

struct TrialResult {
    std::size_t trial_index = 0;
    double tvd = 0.0;
    double dfc = 0.0;
    std::string key;
    std::uint64_t seed = 0;
    bool sound = false;
    std::string correct_output;
};

struct ExperimentSummary {
    std::string algorithm;
    std::size_t trials = 0;
    double median_tvd = 0.0;
    double median_dfc = 0.0;
    double q1_tvd = 0.0, q3_tvd = 0.0;
    double q1_dfc = 0.0, q3_dfc = 0.0;
    bool correction_soundness = false;
};

/// One randomized trial: plan -> obfuscate -> transpile -> simulate/sample ->
/// metrics -> classical correction -> soundness check (corrected
/// distribution vs the original's, max-abs < 1e-9). num_gates == 0 is the
/// identity pipeline. Encryptor operands are drawn from measured qubits.
TrialResult run_trial(const Benchmark& bench, const GatePool& pool,
                      std::size_t num_gates, std::uint64_t shots,
                      std::uint64_t seed);

struct ExperimentResult {
    ExperimentSummary summary;
    std::vector<TrialResult> trials;
};

/// `trials` independent run_trial calls with seeds derived from master_seed.
ExperimentResult run_experiment(const Benchmark& bench, std::size_t trials,
                                std::uint64_t shots, std::size_t num_gates,
                                const GatePool& pool, std::uint64_t master_seed);

/// The reference six-gate pool: {0: X, 1: CNOT, 2: SWAP, 3: CCNOT, 4: CSWAP, 5: S}.
GatePool default_pool();

/// CSV with header "trial,tvd,dfc,key"; rows sorted by trial index.
std::string trials_to_csv(const std::vector<TrialResult>& trials);

std::string summary_to_json(const ExperimentSummary& summary);

} // namespace qobf
