#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qpart/interaction_graph.hpp"

namespace qpart {

struct QpuConfig {
    std::vector<int> capacities;

    int total_capacity() const;
    int num_qpus() const { return static_cast<int>(capacities.size()); }
    bool homogeneous() const;
};

/// Kernighan-Lin bipartitioning with fixed part sizes. Unequal sizes are
/// handled by padding with isolated dummy vertices; the start partition is
/// a seeded random split.
Allocation kl_bipartition(const InteractionGraph& g, std::pair<int, int> sizes,
                          std::uint64_t rng_seed);

/// Greedy heaviest-edge supernode contraction, filling QPUs in capacity
/// order (largest first). Deterministic: ties break on the smallest qubit
/// index, equal capacities keep their original QPU order.
Allocation gpa_partition(const InteractionGraph& g, const QpuConfig& qpus);

/// Exhaustive optimum over all capacity-respecting assignments. Guarded to
/// at most 12 qubits.
std::pair<Allocation, long long> brute_force_partition(const InteractionGraph& g,
                                                       const QpuConfig& qpus);

}  // namespace qpart
