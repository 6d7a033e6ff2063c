#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpart/evolve.hpp"

namespace qpart {

/// One experiment: a circuit source swept over MAB values and repetitions.
struct ExperimentSpec {
    // either a QASM file path or random-circuit parameters
    std::optional<std::string> qasm_path;
    int random_qubits = 16;
    std::vector<int> random_cx_counts = {1000, 2000, 3000, 4000, 5000,
                                         6000, 7000, 8000, 9000, 10000};
    QpuConfig qpus;
    std::vector<int> mab_values = {10};
    int repetitions = 1;
    Partitioner partitioner = Partitioner::KL;
    std::uint64_t seed = 0;
    GaParams ga = GaParams::test_profile();
    bool record_runtime = true; // false writes 0 ms for byte-stable CSV

    static ExperimentSpec from_json_text(const std::string& text);
};

struct ResultRow {
    std::string circuit_id;
    int qubits;
    long long cx;
    int depth;
    int mab;
    long long baseline;
    long long mha;
    double improvement_pct;
    long long runtime_ms;
    std::uint64_t seed;
};

struct ComparisonResult {
    ResultRow row;
    PlanReport report;
};

ComparisonResult run_comparison(const LayeredCircuit& lc, const QpuConfig& qpus,
                                const GaParams& params, const std::string& circuit_id,
                                bool record_runtime = true);

std::vector<ResultRow> random_sweep(const ExperimentSpec& spec, int threads = 1);

std::string emit_csv(const std::vector<ResultRow>& rows);

}  // namespace qpart
