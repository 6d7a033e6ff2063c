#pragma once

#include <vector>

#include "qpart/interaction_graph.hpp"

namespace qpart {

/// Bipartite structure between the QPU groups of two consecutive blocks.
/// Rows are the physical QPUs holding the previous block's groups, columns
/// are the next block's groups. entries[a][b] counts qubits the two groups
/// share; feasible[a][b] says whether group b fits QPU a.
struct OverlapMatrix {
    std::vector<std::vector<int>> entries;
    std::vector<std::vector<bool>> feasible;
};

struct TeleportPlan {
    long long teleports;
    std::vector<int> relabeling; // next-block group -> physical QPU index
};

OverlapMatrix build_overlap(const Allocation& a_prev, const Allocation& a_next);

/// Minimum qubit teleportations over all capacity-feasible relabelings of
/// the next block's groups, via max-weight assignment on the overlaps.
TeleportPlan min_teleports(const Allocation& a_prev, const Allocation& a_next);

/// Enumeration oracle over all feasible QPU permutations (at most 6 QPUs).
long long brute_force_teleports(const Allocation& a_prev, const Allocation& a_next);

/// Rewrite an allocation through a group -> physical QPU relabeling.
Allocation apply_relabeling(const Allocation& a, const std::vector<int>& relabeling);

}  // namespace qpart
