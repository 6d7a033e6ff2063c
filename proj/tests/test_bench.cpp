#include "doctest.h"
#include "qpart/bench.hpp"
#include "qpart/circuit.hpp"

using namespace qpart;

TEST_CASE("csv formatting") {
    CHECK(emit_csv({}) ==
          "circuit_id,qubits,cx,depth,mab,baseline,mha,improvement_pct,runtime_ms,seed\n");

    ResultRow row{"toy", 4, 12, 10, 5, 400, 332, 17.0, 3, 42};
    std::string csv = emit_csv({row});
    CHECK(csv == "circuit_id,qubits,cx,depth,mab,baseline,mha,improvement_pct,runtime_ms,seed\n"
                 "toy,4,12,10,5,400,332,17.00,3,42\n");

    ResultRow quoted{"a,b\"c", 1, 0, 0, 1, 0, 0, 0.0, 0, 0};
    CHECK(emit_csv({quoted}).find("\"a,b\"\"c\"") != std::string::npos);
}

TEST_CASE("run_comparison fills a row and never loses to the baseline") {
    Circuit c = generate_random_circuit(8, 200, 3);
    LayeredCircuit lc = layerize(c);
    GaParams ga = GaParams::test_profile();
    ga.generations = 5;
    ga.population_size = 10;
    ga.init_mutations = 100;
    ga.max_blocks = 5;
    ga.rng_seed = 4;
    auto result = run_comparison(lc, QpuConfig{{4, 4}}, ga, "toy");
    CHECK(result.row.qubits == 8);
    CHECK(result.row.cx == 200);
    CHECK(result.row.depth == lc.depth());
    CHECK(result.row.mha <= result.row.baseline);
    CHECK(result.row.improvement_pct >= 0.0);
    CHECK(result.row.mha == result.report.total);
}

TEST_CASE("spec parsing and reproducible sweeps") {
    const std::string spec_text = R"({
        "random": {"qubits": 6, "cx": [60, 120]},
        "qpus": [3, 3],
        "mab": [4],
        "repetitions": 2,
        "partitioner": "kl",
        "seed": 11,
        "record_runtime": false,
        "ga": {"population_size": 8, "generations": 4, "init_mutations": 50}
    })";
    ExperimentSpec spec = ExperimentSpec::from_json_text(spec_text);
    CHECK(spec.random_qubits == 6);
    CHECK(spec.repetitions == 2);
    CHECK(spec.ga.population_size == 8);

    auto rows = random_sweep(spec);
    REQUIRE(rows.size() == 4); // 2 gate counts x 2 repetitions x 1 mab
    for (const ResultRow& r : rows) CHECK(r.mha <= r.baseline);

    CHECK(emit_csv(rows) == emit_csv(random_sweep(spec)));
    // the same spec with threads gives the same rows
    CHECK(emit_csv(rows) == emit_csv(random_sweep(spec, 4)));
}
