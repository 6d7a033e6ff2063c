#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "qpart/circuit.hpp"
#include "qpart/partition.hpp"
#include "qpart/teleport.hpp"

namespace qpart {

/// Block-depth vector; entries are >= 0 and sum to the circuit layer count.
using Genotype = std::vector<int>;

enum class Partitioner { KL, GPA };

struct GaParams {
    int population_size = 50;
    int generations = 100;
    int tournament_size = 3;
    double crossover_prob = 0.7;
    double mutation_prob = 0.3;
    int mutation_constant = 0; // 0 -> max(1, round(L / (10 K)))
    double zero_intro_prob = 0.1;
    int init_mutations = 100000;
    int max_blocks = 10;
    Partitioner partitioner = Partitioner::KL;
    std::uint64_t rng_seed = 0;

    /// Reduced-scale preset that keeps test runs under minutes.
    static GaParams test_profile();

    int effective_mutation_constant(int layer_count) const;
};

struct BlockPlan {
    int layer_begin;
    int layer_end;
    Allocation allocation; // in physical QPU indices
    long long cut;
};

struct BoundaryPlan {
    long long teleports;
    std::vector<int> relabeling; // next-block group -> physical QPU
};

struct PlanReport {
    Genotype best_genotype;
    std::vector<BlockPlan> blocks;
    std::vector<BoundaryPlan> boundaries;
    long long total = 0;
    long long baseline = 0;
    double improvement_pct = 0.0;

    std::string to_json() const;
};

Genotype rebalance(const std::vector<int>& raw, int target_sum);
Genotype mutate(const Genotype& g, int mutation_constant, double zero_intro_prob,
                std::mt19937_64& rng);
std::pair<Genotype, Genotype> crossover(const Genotype& a, const Genotype& b, int layer_count,
                                        std::mt19937_64& rng);
std::vector<Genotype> generate_individuals(const GaParams& params, int layer_count,
                                           std::mt19937_64& rng);

/// Fitness of a blocking: in-block cut costs under the chosen partitioner
/// plus min teleports between consecutive nonempty blocks. Per-block
/// allocations are cached by layer range, so genotypes sharing boundaries
/// reuse work; partitioner seeds derive from (run seed, layer range) alone
/// to keep identical blocks identical across the whole run.
class FitnessEvaluator {
public:
    FitnessEvaluator(const LayeredCircuit& lc, QpuConfig qpus, Partitioner partitioner,
                     std::uint64_t run_seed);

    long long evaluate(const Genotype& g);
    PlanReport build_report(const Genotype& g);

    const Allocation& block_allocation(int layer_begin, int layer_end);

private:
    const LayeredCircuit& lc_;
    QpuConfig qpus_;
    Partitioner partitioner_;
    std::uint64_t run_seed_;
    std::map<std::pair<int, int>, std::pair<Allocation, long long>> block_cache_;
    std::map<Genotype, long long> fitness_cache_;

    const std::pair<Allocation, long long>& block(int layer_begin, int layer_end);
};

long long evaluate_fitness(const Genotype& g, const LayeredCircuit& lc, const QpuConfig& qpus,
                           Partitioner partitioner, std::uint64_t run_seed = 0);

PlanReport run_ga(const LayeredCircuit& lc, const QpuConfig& qpus, const GaParams& params);

}  // namespace qpart
