#include "qpart/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "json.hpp"
#include "qpart/errors.hpp"

namespace qpart {

GaParams GaParams::test_profile() {
    GaParams p;
    p.population_size = 20;
    p.generations = 30;
    p.init_mutations = 1000;
    return p;
}

int GaParams::effective_mutation_constant(int layer_count) const {
    if (mutation_constant > 0) return mutation_constant;
    return std::max(1, static_cast<int>(std::lround(
                           layer_count / (10.0 * std::max(1, max_blocks)))));
}

std::string PlanReport::to_json() const {
    nlohmann::json j;
    j["best_genotype"] = best_genotype;
    auto& jb = j["blocks"] = nlohmann::json::array();
    for (const BlockPlan& b : blocks) {
        nlohmann::json e;
        e["layer_begin"] = b.layer_begin;
        e["layer_end"] = b.layer_end;
        e["allocation"] = b.allocation.assignment;
        e["cut_cost"] = b.cut;
        jb.push_back(std::move(e));
    }
    auto& jt = j["boundaries"] = nlohmann::json::array();
    for (const BoundaryPlan& b : boundaries) {
        nlohmann::json e;
        e["teleports"] = b.teleports;
        e["relabeling"] = b.relabeling;
        jt.push_back(std::move(e));
    }
    j["total_bell_pairs"] = total;
    j["baseline_bell_pairs"] = baseline;
    j["improvement_pct"] = improvement_pct;
    return j.dump(2);
}

Genotype rebalance(const std::vector<int>& raw, int target_sum) {
    if (target_sum < 0) throw Impossible("negative target sum");
    Genotype g = raw;
    for (int e : g)
        if (e < 0) throw Impossible("negative genotype entry");
    long long sum = std::accumulate(g.begin(), g.end(), 0LL);
    const int k = static_cast<int>(g.size());
    if (k == 0) {
        if (target_sum != 0) throw Impossible("cannot rebalance an empty vector");
        return g;
    }
    if (sum > target_sum) {
        // subtract 1 cyclically, largest entries first, skipping zeros
        std::vector<int> order(k);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return raw[a] > raw[b]; });
        size_t pos = 0;
        while (sum > target_sum) {
            int idx = order[pos % k];
            ++pos;
            if (g[idx] == 0) continue;
            --g[idx];
            --sum;
        }
    } else if (sum < target_sum) {
        size_t pos = 0;
        while (sum < target_sum) {
            ++g[pos % k];
            ++pos;
            ++sum;
        }
    }
    return g;
}

Genotype mutate(const Genotype& g, int mutation_constant, double zero_intro_prob,
                std::mt19937_64& rng) {
    const int k = static_cast<int>(g.size());
    Genotype out = g;
    if (k < 2) return out;

    std::uniform_int_distribution<int> pick(0, k - 1);
    std::uniform_int_distribution<int> pick_other(0, k - 2);
    int i = pick(rng);
    int j = pick_other(rng);
    if (j >= i) ++j;
    std::uniform_int_distribution<int> coin(0, 1);
    int src = coin(rng) ? i : j;
    int dst = src == i ? j : i;
    int amount = std::min(mutation_constant, out[src]); // clamp at zero
    out[src] -= amount;
    out[dst] += amount;

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    if (unit(rng) < zero_intro_prob) {
        int r = pick(rng);
        int value = out[r];
        out[r] = 0;
        int share = value / (k - 1);
        int remainder = value % (k - 1);
        for (int idx = 0, n = 0; idx < k; ++idx) {
            if (idx == r) continue;
            out[idx] += share + (n < remainder ? 1 : 0);
            ++n;
        }
    }
    return out;
}

std::pair<Genotype, Genotype> crossover(const Genotype& a, const Genotype& b, int layer_count,
                                        std::mt19937_64& rng) {
    if (a.size() != b.size()) throw ShapeMismatch("crossover parents differ in length");
    const int k = static_cast<int>(a.size());
    std::uniform_int_distribution<int> cut(0, k);
    int c1 = cut(rng), c2 = cut(rng);
    if (c1 > c2) std::swap(c1, c2);

    Genotype child1 = a, child2 = b;
    for (int i = c1; i < c2; ++i) std::swap(child1[i], child2[i]);
    return {rebalance(child1, layer_count), rebalance(child2, layer_count)};
}

std::vector<Genotype> generate_individuals(const GaParams& params, int layer_count,
                                           std::mt19937_64& rng) {
    const int k = params.max_blocks;
    const int c = params.effective_mutation_constant(layer_count);

    Genotype base(k, layer_count / k);
    for (int i = 0; i < layer_count % k; ++i) ++base[i];

    std::vector<Genotype> pop;
    pop.reserve(params.population_size);
    for (int i = 0; i < params.population_size; ++i) {
        Genotype g = base;
        for (int m = 0; m < params.init_mutations; ++m)
            g = mutate(g, c, params.zero_intro_prob, rng);
        pop.push_back(std::move(g));
    }
    // the single-block baseline is always present in the initial population
    Genotype single(k, 0);
    single[0] = layer_count;
    pop.back() = std::move(single);
    return pop;
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::uint64_t x = seed ^ (a * 0x9e3779b97f4a7c15ULL) ^ (b * 0xbf58476d1ce4e5b9ULL);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

}  // namespace

FitnessEvaluator::FitnessEvaluator(const LayeredCircuit& lc, QpuConfig qpus,
                                   Partitioner partitioner, std::uint64_t run_seed)
    : lc_(lc), qpus_(std::move(qpus)), partitioner_(partitioner), run_seed_(run_seed) {
    if (qpus_.total_capacity() < lc.circuit.num_qubits)
        throw CapacityError("circuit with " + std::to_string(lc.circuit.num_qubits) +
                            " qubits does not fit total capacity " +
                            std::to_string(qpus_.total_capacity()));
    if (partitioner_ == Partitioner::KL && qpus_.num_qpus() != 2)
        throw CapacityError("K-L partitioner requires exactly 2 QPUs");
}

const std::pair<Allocation, long long>& FitnessEvaluator::block(int layer_begin, int layer_end) {
    auto key = std::make_pair(layer_begin, layer_end);
    auto it = block_cache_.find(key);
    if (it != block_cache_.end()) return it->second;

    BlockSlice slice;
    slice.layer_begin = layer_begin;
    slice.layer_end = layer_end;
    for (int l = layer_begin; l < layer_end; ++l)
        slice.gate_indices.insert(slice.gate_indices.end(), lc_.layers[l].begin(),
                                  lc_.layers[l].end());
    InteractionGraph g = build_interaction_graph(lc_.circuit, slice);

    Allocation alloc;
    if (partitioner_ == Partitioner::KL) {
        std::uint64_t seed = mix_seed(run_seed_, layer_begin, layer_end);
        alloc = kl_bipartition(g, {qpus_.capacities[0], qpus_.capacities[1]}, seed);
    } else {
        alloc = gpa_partition(g, qpus_);
    }
    long long cut = cut_cost(g, alloc);
    return block_cache_.emplace(key, std::make_pair(std::move(alloc), cut)).first->second;
}

const Allocation& FitnessEvaluator::block_allocation(int layer_begin, int layer_end) {
    return block(layer_begin, layer_end).first;
}

long long FitnessEvaluator::evaluate(const Genotype& g) {
    auto cached = fitness_cache_.find(g);
    if (cached != fitness_cache_.end()) return cached->second;

    std::vector<BlockSlice> slices = slice_blocks(lc_, g);
    long long total = 0;
    Allocation physical;
    bool have_prev = false;
    for (const BlockSlice& s : slices) {
        const auto& [alloc, cut] = block(s.layer_begin, s.layer_end);
        total += cut;
        if (have_prev) {
            TeleportPlan plan = min_teleports(physical, alloc);
            total += plan.teleports;
            physical = apply_relabeling(alloc, plan.relabeling);
        } else {
            physical = alloc;
            have_prev = true;
        }
    }
    fitness_cache_.emplace(g, total);
    return total;
}

PlanReport FitnessEvaluator::build_report(const Genotype& g) {
    PlanReport report;
    report.best_genotype = g;

    std::vector<BlockSlice> slices = slice_blocks(lc_, g);
    Allocation physical;
    bool have_prev = false;
    for (const BlockSlice& s : slices) {
        const auto& [alloc, cut] = block(s.layer_begin, s.layer_end);
        Allocation placed = alloc;
        if (have_prev) {
            TeleportPlan plan = min_teleports(physical, alloc);
            placed = apply_relabeling(alloc, plan.relabeling);
            report.boundaries.push_back(BoundaryPlan{plan.teleports, plan.relabeling});
            report.total += plan.teleports;
        }
        report.blocks.push_back(BlockPlan{s.layer_begin, s.layer_end, placed, cut});
        report.total += cut;
        physical = placed;
        have_prev = true;
    }

    Genotype single(g.size(), 0);
    if (single.empty()) single.push_back(0);
    single[0] = lc_.depth();
    report.baseline = evaluate(single);
    report.improvement_pct =
        report.baseline > 0
            ? (report.baseline - report.total) * 100.0 / report.baseline
            : 0.0;
    return report;
}

long long evaluate_fitness(const Genotype& g, const LayeredCircuit& lc, const QpuConfig& qpus,
                           Partitioner partitioner, std::uint64_t run_seed) {
    FitnessEvaluator ev(lc, qpus, partitioner, run_seed);
    return ev.evaluate(g);
}

PlanReport run_ga(const LayeredCircuit& lc, const QpuConfig& qpus, const GaParams& params) {
    const int layer_count = lc.depth();
    const int c = params.effective_mutation_constant(layer_count);
    std::mt19937_64 rng(params.rng_seed);

    FitnessEvaluator evaluator(lc, qpus, params.partitioner, params.rng_seed);
    std::vector<Genotype> population = generate_individuals(params, layer_count, rng);
    std::vector<long long> fitness(population.size());

    Genotype hof_genotype;
    long long hof_fitness = -1;
    auto score = [&](const std::vector<Genotype>& pop) {
        for (size_t i = 0; i < pop.size(); ++i) {
            fitness[i] = evaluator.evaluate(pop[i]);
            if (hof_fitness < 0 || fitness[i] < hof_fitness) {
                hof_fitness = fitness[i];
                hof_genotype = pop[i];
            }
        }
    };
    score(population);

    const int n = params.population_size;
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    for (int gen = 0; gen < params.generations; ++gen) {
        // tournament selection, with replacement
        std::vector<Genotype> parents;
        parents.reserve(n);
        for (int i = 0; i < n; ++i) {
            int best = pick(rng);
            for (int t = 1; t < params.tournament_size; ++t) {
                int cand = pick(rng);
                if (fitness[cand] < fitness[best]) best = cand;
            }
            parents.push_back(population[best]);
        }

        std::vector<Genotype> children;
        children.reserve(n);
        for (int i = 0; i + 1 < n; i += 2) {
            if (unit(rng) < params.crossover_prob) {
                auto [c1, c2] = crossover(parents[i], parents[i + 1], layer_count, rng);
                children.push_back(std::move(c1));
                children.push_back(std::move(c2));
            } else {
                children.push_back(parents[i]);
                children.push_back(parents[i + 1]);
            }
        }
        if (n % 2 == 1) children.push_back(parents.back());

        for (Genotype& child : children)
            if (unit(rng) < params.mutation_prob)
                child = mutate(child, c, params.zero_intro_prob, rng);

        population = std::move(children);
        score(population);
    }

    return evaluator.build_report(hof_genotype);
}

}  // namespace qpart
