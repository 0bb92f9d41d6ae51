#include "qobf/bench.hpp"
#include "qobf/corrector.hpp"
#include "qobf/error.hpp"
#include "qobf/json_io.hpp"
#include "qobf/key_codec.hpp"
#include "qobf/metrics.hpp"
#include "qobf/qasm.hpp"
#include "qobf/statevector.hpp"
#include "qobf/transpiler.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <sys/stat.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitSoundness = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw qobf::Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw qobf::Error("cannot write '" + path + "'");
    out << content;
}

qobf::QuantumCircuit load_circuit(const std::string& path) {
    const auto result = qobf::parse_qasm(read_file(path));
    for (const auto& d : result.diagnostics) {
        const char* sev =
            d.severity == qobf::ParseDiagnostic::Severity::Error ? "error" : "warning";
        std::cerr << path << ':' << d.span.line << ':' << d.span.column << ": " << sev
                  << ": " << d.message << '\n';
    }
    if (!result.ok()) throw qobf::Error("failed to parse '" + path + "'");
    return *result.circuit;
}

void warn_if_world_readable(const std::string& path) {
    struct stat st {};
    if (stat(path.c_str(), &st) == 0 && (st.st_mode & S_IROTH))
        std::cerr << "warning: key file '" << path
                  << "' is world-readable; the key is the secret\n";
}

int cmd_obfuscate(const std::string& in, const std::string& pool_path,
                  const std::string& plan_path, std::size_t num_gates,
                  std::uint64_t seed, const std::string& out,
                  const std::string& key_path) {
    const auto circuit = load_circuit(in);
    const auto pool = qobf::pool_from_json(read_file(pool_path));
    std::vector<qobf::InsertionRecord> plan;
    if (!plan_path.empty()) {
        plan = qobf::plan_from_json(read_file(plan_path));
    } else {
        plan = qobf::random_plan(pool, circuit.num_qubits, num_gates, seed);
    }
    const auto [obf, key] = qobf::obfuscate(circuit, pool, plan);
    write_file(out, qobf::emit_qasm(obf));
    write_file(key_path, qobf::encode_key(key) + "\n");
    warn_if_world_readable(key_path);
    return 0;
}

int cmd_transpile(const std::string& in, const std::string& basis_names, bool no_opt,
                  const std::string& out) {
    const auto circuit = load_circuit(in);
    const auto basis = qobf::BasisSet::from_names(basis_names);
    write_file(out, qobf::emit_qasm(qobf::transpile(circuit, basis, !no_opt)));
    return 0;
}

int cmd_simulate(const std::string& in, std::uint64_t shots, std::uint64_t seed,
                 const std::string& out) {
    const auto circuit = load_circuit(in);
    const auto probs = qobf::circuit_probabilities(circuit);
    write_file(out, qobf::counts_to_json(qobf::sample(probs, shots, seed)));
    return 0;
}

int cmd_correct(const std::string& counts_path, const std::string& key_path,
                const std::string& pool_path, const std::string& in,
                const std::string& out) {
    const auto counts = qobf::counts_from_json(read_file(counts_path));
    const auto pool = qobf::pool_from_json(read_file(pool_path));
    const auto circuit = load_circuit(in);
    std::string key_text = read_file(key_path);
    while (!key_text.empty() && (key_text.back() == '\n' || key_text.back() == '\r'))
        key_text.pop_back();
    const auto key = qobf::decode_key(key_text, pool, circuit.num_qubits);
    write_file(out, qobf::counts_to_json(
                        qobf::correct_counts(counts, key, pool, circuit.measurements)));
    return 0;
}

int cmd_evaluate(const std::string& orig_path, const std::string& obfus_path,
                 const std::string& correct_output, const std::string& out) {
    const auto orig = qobf::counts_from_json(read_file(orig_path));
    const auto obfus = qobf::counts_from_json(read_file(obfus_path));
    nlohmann::json j;
    j["tvd"] = qobf::tvd(orig, obfus);
    j["dfc"] = qobf::dfc(obfus, correct_output);
    j["correct_output"] = correct_output;
    write_file(out, j.dump(2) + "\n");
    return 0;
}

int cmd_bench(const std::string& algo, std::size_t trials, std::uint64_t shots,
              std::size_t num_gates, std::uint64_t seed, const std::string& out_dir) {
    std::vector<std::string> algos;
    if (algo == "all") {
        algos = {"bv", "grover", "qaoa", "shor", "hhl"};
    } else {
        algos = {algo};
    }
    std::filesystem::create_directories(out_dir);
    const auto pool = qobf::default_pool();
    bool all_sound = true;
    for (const auto& name : algos) {
        const auto bench = qobf::benchmark_by_name(name);
        const auto result =
            qobf::run_experiment(bench, trials, shots, num_gates, pool, seed);
        const auto dir = std::filesystem::path(out_dir) / name;
        std::filesystem::create_directories(dir);
        write_file((dir / "summary.json").string(),
                   qobf::summary_to_json(result.summary));
        write_file((dir / "trials.csv").string(), qobf::trials_to_csv(result.trials));
        std::cout << name << ": median TVD " << result.summary.median_tvd
                  << ", median DFC " << result.summary.median_dfc << ", soundness "
                  << (result.summary.correction_soundness ? "ok" : "FAILED") << '\n';
        all_sound &= result.summary.correction_soundness;
    }
    return all_sound ? 0 : kExitSoundness;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum circuit obfuscation toolchain"};
    app.require_subcommand(1);

    std::string in, out, pool_path, plan_path, key_path, counts_path;
    std::string basis = "cx,rz,rx,x,p";
    std::string orig_path, obfus_path, correct_output;
    std::string algo = "all", out_dir = "results";
    std::size_t num_gates = 5, trials = 100;
    std::uint64_t shots = 1024, seed = 0;
    bool no_opt = false;

    auto* obf = app.add_subcommand("obfuscate", "append encryptor gates and emit the key");
    obf->add_option("--in", in)->required();
    obf->add_option("--pool", pool_path)->required();
    obf->add_option("--plan", plan_path);
    obf->add_option("--num-gates", num_gates);
    obf->add_option("--seed", seed);
    obf->add_option("--out", out)->required();
    obf->add_option("--key", key_path)->required();

    auto* tr = app.add_subcommand("transpile", "decompose to a basis and optimize");
    tr->add_option("--in", in)->required();
    tr->add_option("--basis", basis);
    tr->add_flag("--no-opt", no_opt);
    tr->add_option("--out", out)->required();

    auto* sim = app.add_subcommand("simulate", "sample measurement counts");
    sim->add_option("--in", in)->required();
    sim->add_option("--shots", shots);
    sim->add_option("--seed", seed);
    sim->add_option("--out", out)->required();

    auto* cor = app.add_subcommand("correct", "classically correct counts with a key");
    cor->add_option("--counts", counts_path)->required();
    cor->add_option("--key", key_path)->required();
    cor->add_option("--pool", pool_path)->required();
    cor->add_option("--in", in)->required();
    cor->add_option("--out", out)->required();

    auto* ev = app.add_subcommand("evaluate", "compute TVD and DFC");
    ev->add_option("--orig", orig_path)->required();
    ev->add_option("--obfus", obfus_path)->required();
    ev->add_option("--correct-output", correct_output)->required();
    ev->add_option("--out", out)->required();

    auto* bn = app.add_subcommand("bench", "run randomized benchmark experiments");
    bn->add_option("--algo", algo)
        ->check(CLI::IsMember({"bv", "grover", "qaoa", "shor", "hhl", "all"}));
    bn->add_option("--trials", trials);
    bn->add_option("--shots", shots);
    bn->add_option("--num-gates", num_gates);
    bn->add_option("--seed", seed);
    bn->add_option("--out-dir", out_dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (obf->parsed())
            return cmd_obfuscate(in, pool_path, plan_path, num_gates, seed, out, key_path);
        if (tr->parsed()) return cmd_transpile(in, basis, no_opt, out);
        if (sim->parsed()) return cmd_simulate(in, shots, seed, out);
        if (cor->parsed()) return cmd_correct(counts_path, key_path, pool_path, in, out);
        if (ev->parsed()) return cmd_evaluate(orig_path, obfus_path, correct_output, out);
        if (bn->parsed()) return cmd_bench(algo, trials, shots, num_gates, seed, out_dir);
    } catch (const qobf::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitUsage;
}
