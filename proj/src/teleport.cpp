#include "qpart/teleport.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "qpart/assignment.hpp"
#include "qpart/errors.hpp"

namespace qpart {

namespace {

void check_shapes(const Allocation& a_prev, const Allocation& a_next) {
    if (a_prev.assignment.size() != a_next.assignment.size())
        throw ShapeMismatch("allocations cover different qubit counts");
    if (a_prev.qpu_capacities != a_next.qpu_capacities)
        throw ShapeMismatch("allocations use different QPU configurations");
}

}  // namespace

OverlapMatrix build_overlap(const Allocation& a_prev, const Allocation& a_next) {
    check_shapes(a_prev, a_next);
    const int k = a_prev.num_qpus();
    OverlapMatrix m;
    m.entries.assign(k, std::vector<int>(k, 0));
    m.feasible.assign(k, std::vector<bool>(k, false));

    for (size_t q = 0; q < a_prev.assignment.size(); ++q)
        ++m.entries[a_prev.assignment[q]][a_next.assignment[q]];

    std::vector<int> next_sizes(k, 0);
    for (int a : a_next.assignment) ++next_sizes[a];
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            m.feasible[a][b] = next_sizes[b] <= a_prev.qpu_capacities[a];
    return m;
}

TeleportPlan min_teleports(const Allocation& a_prev, const Allocation& a_next) {
    OverlapMatrix m = build_overlap(a_prev, a_next);
    const int k = static_cast<int>(m.entries.size());
    const long long forbidden = std::numeric_limits<long long>::max() / 16;

    // minimise negated overlap; infeasible cells carry a sentinel cost
    std::vector<std::vector<long long>> cost(k, std::vector<long long>(k));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            cost[a][b] = m.feasible[a][b] ? -static_cast<long long>(m.entries[a][b]) : forbidden;

    std::vector<int> row_to_col = solve_assignment(cost);
    long long overlap = 0;
    std::vector<int> relabeling(k, -1);
    for (int a = 0; a < k; ++a) {
        int b = row_to_col[a];
        if (!m.feasible[a][b])
            throw Infeasible("no capacity-feasible relabeling between blocks");
        overlap += m.entries[a][b];
        relabeling[b] = a;
    }
    return TeleportPlan{static_cast<long long>(a_prev.assignment.size()) - overlap,
                        std::move(relabeling)};
}

long long brute_force_teleports(const Allocation& a_prev, const Allocation& a_next) {
    check_shapes(a_prev, a_next);
    const int k = a_prev.num_qpus();
    if (k > 6) throw TooLarge("permutation oracle is limited to 6 QPUs");

    OverlapMatrix m = build_overlap(a_prev, a_next);
    const long long n = static_cast<long long>(a_prev.assignment.size());

    std::vector<int> perm(k); // next-block group b -> physical QPU perm[b]
    std::iota(perm.begin(), perm.end(), 0);
    long long best = -1;
    do {
        bool ok = true;
        long long overlap = 0;
        for (int b = 0; b < k && ok; ++b) {
            if (!m.feasible[perm[b]][b]) ok = false;
            overlap += m.entries[perm[b]][b];
        }
        if (ok && (best < 0 || n - overlap < best)) best = n - overlap;
    } while (std::next_permutation(perm.begin(), perm.end()));

    if (best < 0) throw Infeasible("no capacity-feasible relabeling between blocks");
    return best;
}

Allocation apply_relabeling(const Allocation& a, const std::vector<int>& relabeling) {
    Allocation out;
    out.qpu_capacities = a.qpu_capacities;
    out.assignment.resize(a.assignment.size());
    for (size_t q = 0; q < a.assignment.size(); ++q)
        out.assignment[q] = relabeling[a.assignment[q]];
    return out;
}

}  // namespace qpart
