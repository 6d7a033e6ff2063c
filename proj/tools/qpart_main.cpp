#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qpart/bench.hpp"
#include "qpart/errors.hpp"
#include "qpart/qasm.hpp"

namespace {

using namespace qpart;

std::vector<int> parse_capacities(const std::string& s) {
    std::vector<int> caps;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) caps.push_back(std::stoi(tok));
    if (caps.empty()) throw ParseError("--qpus needs a comma-separated capacity list");
    for (int c : caps)
        if (c < 1) throw ParseError("QPU capacities must be >= 1");
    return caps;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("QPART_SEED")) return std::stoull(env);
    return 0;
}

Partitioner pick_partitioner(const std::string& flag, const QpuConfig& qpus) {
    if (flag == "kl") {
        if (qpus.num_qpus() != 2 || !qpus.homogeneous())
            throw CapacityError("K-L requires exactly two equal-capacity QPUs");
        return Partitioner::KL;
    }
    if (flag == "gpa") return Partitioner::GPA;
    // auto: K-L for 2 equal QPUs, GPA otherwise
    return qpus.num_qpus() == 2 && qpus.homogeneous() ? Partitioner::KL : Partitioner::GPA;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << content;
}

LayeredCircuit load_cx_layers(const std::string& qasm_path) {
    Circuit c = parse_qasm_file(qasm_path);
    return layerize(c.cx_only());
}

int cmd_partition(const std::string& qasm, const std::string& qpus_flag,
                  const std::string& partitioner_flag, std::uint64_t seed,
                  const std::string& out_path) {
    QpuConfig qpus{parse_capacities(qpus_flag)};
    LayeredCircuit lc = load_cx_layers(qasm);
    InteractionGraph g = build_interaction_graph(lc.circuit);

    Partitioner p = pick_partitioner(partitioner_flag, qpus);
    Allocation alloc = p == Partitioner::KL
                           ? kl_bipartition(g, {qpus.capacities[0], qpus.capacities[1]}, seed)
                           : gpa_partition(g, qpus);
    long long cost = cut_cost(g, alloc);
    std::cout << "qubits: " << lc.circuit.num_qubits << "\ncx gates: " << g.total_weight()
              << "\ncut cost (Bell pairs): " << cost << "\n";
    if (!out_path.empty()) write_file(out_path, alloc.to_json() + "\n");
    return 0;
}

int cmd_plan(const std::string& qasm, const std::string& qpus_flag, GaParams params,
             const std::string& partitioner_flag, const std::string& out_path) {
    QpuConfig qpus{parse_capacities(qpus_flag)};
    LayeredCircuit lc = load_cx_layers(qasm);
    params.partitioner = pick_partitioner(partitioner_flag, qpus);

    PlanReport report = run_ga(lc, qpus, params);
    std::cout << "total Bell pairs: " << report.total << "\nbaseline (single block): "
              << report.baseline << "\nimprovement: " << report.improvement_pct << "%\n";
    if (!out_path.empty()) write_file(out_path, report.to_json() + "\n");
    return 0;
}

int cmd_randgen(int qubits, int cx, std::uint64_t seed, const std::string& out_path) {
    Circuit c = generate_random_circuit(qubits, cx, seed);
    std::string text = write_qasm(c);
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    return 0;
}

int cmd_bench(const std::string& config_path, const std::string& out_path, int threads) {
    std::ifstream in(config_path);
    if (!in) throw IoError("cannot open '" + config_path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    ExperimentSpec spec = ExperimentSpec::from_json_text(ss.str());

    std::vector<ResultRow> rows = random_sweep(spec, threads);
    std::string csv = emit_csv(rows);
    if (out_path.empty())
        std::cout << csv;
    else
        write_file(out_path, csv);

    double mean = 0;
    for (const ResultRow& r : rows) mean += r.improvement_pct;
    if (!rows.empty()) mean /= rows.size();
    std::cerr << rows.size() << " rows, mean improvement " << mean << "%\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distributed quantum circuit partitioning and blocking"};
    app.require_subcommand(1);

    std::string qasm, qpus_flag, out_path, partitioner_flag = "auto", config_path;
    std::uint64_t seed = default_seed();
    int qubits = 16, cx = 1000, threads = 1;
    GaParams ga = GaParams{};

    auto* part = app.add_subcommand("partition", "single-block baseline allocation");
    part->add_option("--qasm", qasm, "OpenQASM 2.0 input")->required();
    part->add_option("--qpus", qpus_flag, "comma-separated QPU capacities")->required();
    part->add_option("--partitioner", partitioner_flag, "kl|gpa|auto");
    part->add_option("--seed", seed);
    part->add_option("--out", out_path, "allocation JSON output");

    auto* plan = app.add_subcommand("plan", "full blocking optimisation");
    plan->add_option("--qasm", qasm)->required();
    plan->add_option("--qpus", qpus_flag)->required();
    plan->add_option("--partitioner", partitioner_flag, "kl|gpa|auto");
    plan->add_option("--mab", ga.max_blocks, "maximum allowed number of blocks");
    plan->add_option("--seed", seed);
    plan->add_option("--population", ga.population_size);
    plan->add_option("--generations", ga.generations);
    plan->add_option("--tournament", ga.tournament_size);
    plan->add_option("--crossover-prob", ga.crossover_prob);
    plan->add_option("--mutation-prob", ga.mutation_prob);
    plan->add_option("--mutation-constant", ga.mutation_constant);
    plan->add_option("--zero-intro-prob", ga.zero_intro_prob);
    plan->add_option("--init-mutations", ga.init_mutations);
    plan->add_option("--out", out_path, "plan report JSON output");

    auto* rand = app.add_subcommand("randgen", "emit a random CNOT-only circuit");
    rand->add_option("--qubits", qubits);
    rand->add_option("--cx", cx);
    rand->add_option("--seed", seed);
    rand->add_option("--out", out_path);

    auto* bench = app.add_subcommand("bench", "run an experiment sweep");
    bench->add_option("--config", config_path, "experiment spec (JSON)")->required();
    bench->add_option("--out", out_path, "CSV output");
    bench->add_option("--threads", threads, "worker thread cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (part->parsed()) return cmd_partition(qasm, qpus_flag, partitioner_flag, seed, out_path);
        if (plan->parsed()) {
            ga.rng_seed = seed;
            return cmd_plan(qasm, qpus_flag, ga, partitioner_flag, out_path);
        }
        if (rand->parsed()) return cmd_randgen(qubits, cx, seed, out_path);
        if (bench->parsed()) return cmd_bench(config_path, out_path, threads);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const UnsupportedGate& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const IndexError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const InvalidSize& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
