#include <numeric>
#include <random>

#include "doctest.h"
#include "qpart/circuit.hpp"
#include "qpart/errors.hpp"
#include "qpart/evolve.hpp"

using namespace qpart;

namespace {

long long sum(const Genotype& g) { return std::accumulate(g.begin(), g.end(), 0LL); }

bool non_negative(const Genotype& g) {
    for (int e : g)
        if (e < 0) return false;
    return true;
}

}  // namespace

TEST_CASE("rebalance examples") {
    CHECK(rebalance({10, 20}, 25) == Genotype{8, 17});
    CHECK(rebalance({3, 4, 5}, 12) == Genotype{3, 4, 5});
    CHECK(rebalance({0, 0}, 3) == Genotype{2, 1});
    CHECK_THROWS_AS(rebalance({1, 2}, -1), Impossible);
}

TEST_CASE("mutation moves the constant between two entries") {
    // exhaust the rng until we hit the documented shapes
    std::mt19937_64 rng(1);
    bool saw_plain_move = false, saw_clamp = false;
    for (int trial = 0; trial < 2000 && !(saw_plain_move && saw_clamp); ++trial) {
        Genotype a = mutate({10, 10, 10, 10}, 3, 0.0, rng);
        CHECK(sum(a) == 40);
        CHECK(non_negative(a));
        int thirteen = 0, seven = 0;
        for (int e : a) {
            thirteen += e == 13;
            seven += e == 7;
        }
        if (thirteen == 1 && seven == 1) saw_plain_move = true;

        Genotype b = mutate({1, 5}, 3, 0.0, rng);
        CHECK(sum(b) == 6);
        CHECK(non_negative(b));
        if (b == Genotype{0, 6}) saw_clamp = true;
    }
    CHECK(saw_plain_move);
    CHECK(saw_clamp);
}

TEST_CASE("zero introduction spreads the removed value evenly") {
    std::mt19937_64 rng(3);
    bool seen = false;
    for (int trial = 0; trial < 500 && !seen; ++trial) {
        Genotype g = mutate({4, 4, 4}, 0, 1.0, rng);
        CHECK(sum(g) == 12);
        if (g == Genotype{6, 0, 6}) seen = true;
    }
    CHECK(seen);
}

TEST_CASE("crossover swaps middles and rebalances") {
    std::mt19937_64 rng(11);
    Genotype a = {1, 2, 3, 4}, b = {5, 6, 7, 8};
    for (int trial = 0; trial < 100; ++trial) {
        auto [c1, c2] = crossover(a, b, 10, rng);
        CHECK(sum(c1) == 10);
        CHECK(sum(c2) == 10);
        CHECK(non_negative(c1));
        CHECK(non_negative(c2));
    }
    // identical parents pass through unchanged
    auto [d1, d2] = crossover(a, a, 10, rng);
    CHECK(d1 == a);
    CHECK(d2 == a);
}

TEST_CASE("randomised genotype operations preserve the invariants") {
    std::mt19937_64 rng(99);
    const int L = 100, K = 10;
    Genotype g(K, L / K);
    Genotype h(K, L / K);
    for (int op = 0; op < 10000; ++op) {
        switch (rng() % 3) {
            case 0:
                g = mutate(g, 1 + static_cast<int>(rng() % 5), 0.1, rng);
                break;
            case 1: {
                auto [c1, c2] = crossover(g, h, L, rng);
                g = std::move(c1);
                h = std::move(c2);
                break;
            }
            default:
                g = rebalance(g, L);
        }
        REQUIRE(sum(g) == L);
        REQUIRE(non_negative(g));
        REQUIRE(sum(h) == L);
        REQUIRE(non_negative(h));
    }
}

TEST_CASE("initial population sums to the layer count and seeds the baseline") {
    GaParams params = GaParams::test_profile();
    params.max_blocks = 10;
    params.population_size = 12;
    std::mt19937_64 rng(5);
    auto pop = generate_individuals(params, 100, rng);
    REQUIRE(static_cast<int>(pop.size()) == 12);
    for (const Genotype& g : pop) {
        CHECK(sum(g) == 100);
        CHECK(non_negative(g));
    }
    Genotype single(10, 0);
    single[0] = 100;
    CHECK(std::count(pop.begin(), pop.end(), single) >= 1);

    auto zero = generate_individuals(params, 0, rng);
    for (const Genotype& g : zero) CHECK(sum(g) == 0);
}

TEST_CASE("single-block fitness equals the whole-circuit cut") {
    Circuit c = generate_random_circuit(8, 200, 4);
    LayeredCircuit lc = layerize(c);
    QpuConfig qpus{{4, 4}};
    Genotype single = {lc.depth(), 0, 0};

    FitnessEvaluator ev(lc, qpus, Partitioner::KL, 9);
    long long fit = ev.evaluate(single);
    InteractionGraph g = build_interaction_graph(c);
    CHECK(fit <= g.total_weight());
    CHECK(fit >= 0);

    PlanReport report = ev.build_report(single);
    CHECK(report.total == fit);
    CHECK(report.baseline == fit);
    CHECK(report.boundaries.empty());
}

TEST_CASE("zero-CX circuit has zero fitness for every genotype") {
    Circuit c;
    c.num_qubits = 4;
    for (int i = 0; i < 6; ++i) c.gates.push_back(Gate::unary(i % 4, i));
    LayeredCircuit lc = layerize(c.cx_only());
    REQUIRE(lc.depth() == 0);
    QpuConfig qpus{{2, 2}};
    CHECK(evaluate_fitness({0, 0}, lc, qpus, Partitioner::KL) == 0);
    GaParams params = GaParams::test_profile();
    params.generations = 2;
    params.max_blocks = 3;
    PlanReport report = run_ga(lc, qpus, params);
    CHECK(report.total == 0);
    CHECK(report.improvement_pct == 0.0);
}

TEST_CASE("fitness is bounded by the exhaustive block-wise optimum") {
    // 4-qubit toy circuit, two blocks of two layers
    Circuit c;
    c.num_qubits = 4;
    int seq = 0;
    for (auto [a, b] : std::vector<std::pair<int, int>>{
             {0, 1}, {2, 3}, {0, 2}, {1, 3}, {0, 3}, {1, 2}, {0, 1}, {2, 3}})
        c.gates.push_back(Gate::cx(a, b, seq++));
    LayeredCircuit lc = layerize(c);
    REQUIRE(lc.depth() == 4);
    QpuConfig qpus{{2, 2}};

    auto slices = slice_blocks(lc, {2, 2});
    long long exhaustive = 0;
    std::vector<Allocation> opt;
    for (const auto& s : slices) {
        auto [alloc, cost] = brute_force_partition(build_interaction_graph(c, s), qpus);
        exhaustive += cost;
        opt.push_back(alloc);
    }
    exhaustive += brute_force_teleports(opt[0], opt[1]);

    long long fit = evaluate_fitness({2, 2}, lc, qpus, Partitioner::KL, 1);
    CHECK(fit >= exhaustive);
    CHECK(fit <= build_interaction_graph(c).total_weight());
}

TEST_CASE("run_ga never loses to the seeded baseline") {
    GaParams params = GaParams::test_profile();
    params.generations = 0;
    params.max_blocks = 5;
    params.rng_seed = 13;
    Circuit c = generate_random_circuit(10, 300, 2);
    LayeredCircuit lc = layerize(c);
    QpuConfig qpus{{5, 5}};
    PlanReport report = run_ga(lc, qpus, params);
    CHECK(report.total <= report.baseline);
}

TEST_CASE("run_ga is deterministic") {
    GaParams params = GaParams::test_profile();
    params.generations = 5;
    params.population_size = 8;
    params.init_mutations = 50;
    params.max_blocks = 6;
    params.rng_seed = 123;
    Circuit c = generate_random_circuit(8, 150, 6);
    LayeredCircuit lc = layerize(c);
    QpuConfig qpus{{4, 4}};
    PlanReport a = run_ga(lc, qpus, params);
    PlanReport b = run_ga(lc, qpus, params);
    CHECK(a.to_json() == b.to_json());
}

TEST_CASE("report decomposition matches an independent recomputation") {
    GaParams params = GaParams::test_profile();
    params.generations = 5;
    params.population_size = 10;
    params.init_mutations = 100;
    params.max_blocks = 6;
    params.partitioner = Partitioner::GPA;
    params.rng_seed = 77;
    Circuit c = generate_random_circuit(9, 250, 8);
    LayeredCircuit lc = layerize(c);
    QpuConfig qpus{{3, 3, 3}};
    PlanReport report = run_ga(lc, qpus, params);

    long long total = 0;
    for (const BlockPlan& b : report.blocks) {
        BlockSlice s;
        s.layer_begin = b.layer_begin;
        s.layer_end = b.layer_end;
        for (int l = s.layer_begin; l < s.layer_end; ++l)
            s.gate_indices.insert(s.gate_indices.end(), lc.layers[l].begin(),
                                  lc.layers[l].end());
        CHECK(cut_cost(build_interaction_graph(c, s), b.allocation) == b.cut);
        total += b.cut;
    }
    for (size_t i = 1; i < report.blocks.size(); ++i) {
        // reported allocations are already in physical labels
        long long moved = 0;
        for (int q = 0; q < c.num_qubits; ++q)
            moved += report.blocks[i - 1].allocation.assignment[q] !=
                     report.blocks[i].allocation.assignment[q];
        CHECK(moved == report.boundaries[i - 1].teleports);
        total += moved;
    }
    CHECK(total == report.total);
}

TEST_CASE("kl partitioner requires two QPUs") {
    Circuit c = generate_random_circuit(6, 50, 1);
    LayeredCircuit lc = layerize(c);
    CHECK_THROWS_AS(evaluate_fitness({lc.depth()}, lc, QpuConfig{{2, 2, 2}}, Partitioner::KL),
                    CapacityError);
}
