#include "qpart/bench.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "qpart/errors.hpp"
#include "qpart/qasm.hpp"

namespace qpart {

namespace {

std::uint64_t mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::uint64_t x = seed ^ (a * 0x9e3779b97f4a7c15ULL) ^ (b + 0x6a09e667f3bcc909ULL);
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    x ^= x >> 33;
    return x;
}

Partitioner parse_partitioner(const std::string& s) {
    if (s == "kl" || s == "KL") return Partitioner::KL;
    if (s == "gpa" || s == "GPA") return Partitioner::GPA;
    throw ParseError("unknown partitioner '" + s + "'");
}

}  // namespace

ExperimentSpec ExperimentSpec::from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ExperimentSpec spec;
    if (j.contains("qasm")) spec.qasm_path = j["qasm"].get<std::string>();
    if (j.contains("random")) {
        const auto& r = j["random"];
        if (r.contains("qubits")) spec.random_qubits = r["qubits"].get<int>();
        if (r.contains("cx")) spec.random_cx_counts = r["cx"].get<std::vector<int>>();
    }
    spec.qpus.capacities = j.at("qpus").get<std::vector<int>>();
    if (j.contains("mab")) spec.mab_values = j["mab"].get<std::vector<int>>();
    if (j.contains("repetitions")) spec.repetitions = j["repetitions"].get<int>();
    if (j.contains("partitioner"))
        spec.partitioner = parse_partitioner(j["partitioner"].get<std::string>());
    if (j.contains("seed")) spec.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("record_runtime")) spec.record_runtime = j["record_runtime"].get<bool>();
    if (j.contains("ga")) {
        const auto& g = j["ga"];
        if (g.contains("profile") && g["profile"].get<std::string>() == "full")
            spec.ga = GaParams{};
        if (g.contains("population_size")) spec.ga.population_size = g["population_size"];
        if (g.contains("generations")) spec.ga.generations = g["generations"];
        if (g.contains("tournament_size")) spec.ga.tournament_size = g["tournament_size"];
        if (g.contains("crossover_prob")) spec.ga.crossover_prob = g["crossover_prob"];
        if (g.contains("mutation_prob")) spec.ga.mutation_prob = g["mutation_prob"];
        if (g.contains("mutation_constant")) spec.ga.mutation_constant = g["mutation_constant"];
        if (g.contains("zero_intro_prob")) spec.ga.zero_intro_prob = g["zero_intro_prob"];
        if (g.contains("init_mutations")) spec.ga.init_mutations = g["init_mutations"];
    }
    if (spec.repetitions < 1) throw ParseError("repetitions must be >= 1");
    return spec;
}

ComparisonResult run_comparison(const LayeredCircuit& lc, const QpuConfig& qpus,
                                const GaParams& params, const std::string& circuit_id,
                                bool record_runtime) {
    auto start = std::chrono::steady_clock::now();
    PlanReport report = run_ga(lc, qpus, params);
    auto elapsed = std::chrono::steady_clock::now() - start;

    ResultRow row;
    row.circuit_id = circuit_id;
    row.qubits = lc.circuit.num_qubits;
    row.cx = lc.circuit.cx_count();
    row.depth = lc.depth();
    row.mab = params.max_blocks;
    row.baseline = report.baseline;
    row.mha = report.total;
    row.improvement_pct = report.improvement_pct;
    row.runtime_ms =
        record_runtime
            ? std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()
            : 0;
    row.seed = params.rng_seed;
    return ComparisonResult{std::move(row), std::move(report)};
}

std::vector<ResultRow> random_sweep(const ExperimentSpec& spec, int threads) {
    struct Cell {
        LayeredCircuit lc;
        GaParams ga;
        std::string id;
    };
    std::vector<Cell> cells;

    if (spec.qasm_path) {
        Circuit c = parse_qasm_file(*spec.qasm_path);
        LayeredCircuit lc = layerize(c.cx_only());
        std::string stem = *spec.qasm_path;
        if (auto slash = stem.find_last_of('/'); slash != std::string::npos)
            stem = stem.substr(slash + 1);
        if (auto dot = stem.rfind(".qasm"); dot != std::string::npos) stem = stem.substr(0, dot);
        for (int rep = 0; rep < spec.repetitions; ++rep) {
            for (int mab : spec.mab_values) {
                GaParams ga = spec.ga;
                ga.max_blocks = mab;
                ga.partitioner = spec.partitioner;
                ga.rng_seed = mix(spec.seed, mab, rep);
                cells.push_back({lc, ga, stem + "_rep" + std::to_string(rep)});
            }
        }
    } else {
        for (int cx : spec.random_cx_counts) {
            for (int rep = 0; rep < spec.repetitions; ++rep) {
                std::uint64_t circuit_seed = mix(spec.seed, cx, rep);
                Circuit c = generate_random_circuit(spec.random_qubits, cx, circuit_seed);
                LayeredCircuit lc = layerize(c);
                for (int mab : spec.mab_values) {
                    GaParams ga = spec.ga;
                    ga.max_blocks = mab;
                    ga.partitioner = spec.partitioner;
                    ga.rng_seed = mix(circuit_seed, mab, 0);
                    cells.push_back({lc, ga,
                                     "random_q" + std::to_string(spec.random_qubits) + "_cx" +
                                         std::to_string(cx) + "_rep" + std::to_string(rep)});
                }
            }
        }
    }

    std::vector<ResultRow> rows(cells.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1)) {
            rows[i] = run_comparison(cells[i].lc, spec.qpus, cells[i].ga, cells[i].id,
                                     spec.record_runtime)
                          .row;
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return rows;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string emit_csv(const std::vector<ResultRow>& rows) {
    std::ostringstream out;
    out << "circuit_id,qubits,cx,depth,mab,baseline,mha,improvement_pct,runtime_ms,seed\n";
    char pct[32];
    for (const ResultRow& r : rows) {
        std::snprintf(pct, sizeof(pct), "%.2f", r.improvement_pct);
        out << csv_field(r.circuit_id) << ',' << r.qubits << ',' << r.cx << ',' << r.depth << ','
            << r.mab << ',' << r.baseline << ',' << r.mha << ',' << pct << ',' << r.runtime_ms
            << ',' << r.seed << '\n';
    }
    return out.str();
}

}  // namespace qpart
