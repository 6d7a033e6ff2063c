#include "qpart/partition.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include "qpart/errors.hpp"

namespace qpart {

int QpuConfig::total_capacity() const {
    return std::accumulate(capacities.begin(), capacities.end(), 0);
}

bool QpuConfig::homogeneous() const {
    return std::adjacent_find(capacities.begin(), capacities.end(),
                              std::not_equal_to<>()) == capacities.end();
}

namespace {

std::vector<std::vector<long long>> dense_weights(const InteractionGraph& g, int size) {
    std::vector<std::vector<long long>> w(size, std::vector<long long>(size, 0));
    for (const auto& [e, weight] : g.edges()) {
        w[e.first][e.second] += weight;
        w[e.second][e.first] += weight;
    }
    return w;
}

}  // namespace

Allocation kl_bipartition(const InteractionGraph& g, std::pair<int, int> sizes,
                          std::uint64_t rng_seed) {
    const int n = g.num_qubits();
    const int total = sizes.first + sizes.second;
    if (total < n)
        throw CapacityError("graph with " + std::to_string(n) + " qubits does not fit " +
                            std::to_string(total) + " slots");
    if (sizes.first < 0 || sizes.second < 0) throw CapacityError("negative QPU size");

    // vertices n..total-1 are isolated dummies padding the smaller side
    auto w = dense_weights(g, total);
    std::vector<int> side(total);
    std::vector<int> perm(total);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(rng_seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int i = 0; i < total; ++i) side[perm[i]] = i < sizes.first ? 0 : 1;

    const int swaps_per_pass = std::min(sizes.first, sizes.second);
    std::vector<long long> d(total);
    std::vector<char> locked(total);

    bool improved = swaps_per_pass > 0;
    while (improved) {
        improved = false;
        for (int v = 0; v < total; ++v) {
            long long dv = 0;
            for (int u = 0; u < total; ++u) dv += side[u] != side[v] ? w[v][u] : -w[v][u];
            d[v] = dv;
        }
        std::fill(locked.begin(), locked.end(), 0);

        std::vector<std::pair<int, int>> pair_seq;
        std::vector<long long> gain_seq;
        for (int step = 0; step < swaps_per_pass; ++step) {
            long long best = std::numeric_limits<long long>::min();
            int ba = -1, bb = -1;
            for (int a = 0; a < total; ++a) {
                if (locked[a] || side[a] != 0) continue;
                for (int b = 0; b < total; ++b) {
                    if (locked[b] || side[b] != 1) continue;
                    long long gain = d[a] + d[b] - 2 * w[a][b];
                    if (gain > best) {
                        best = gain;
                        ba = a;
                        bb = b;
                    }
                }
            }
            locked[ba] = locked[bb] = 1;
            pair_seq.emplace_back(ba, bb);
            gain_seq.push_back(best);
            for (int x = 0; x < total; ++x) {
                if (locked[x]) continue;
                if (side[x] == 0)
                    d[x] += 2 * w[x][ba] - 2 * w[x][bb];
                else
                    d[x] += 2 * w[x][bb] - 2 * w[x][ba];
            }
        }

        long long run = 0, best_run = 0;
        int best_prefix = 0;
        for (size_t i = 0; i < gain_seq.size(); ++i) {
            run += gain_seq[i];
            if (run > best_run) {
                best_run = run;
                best_prefix = static_cast<int>(i) + 1;
            }
        }
        if (best_run > 0) {
            for (int i = 0; i < best_prefix; ++i) {
                side[pair_seq[i].first] = 1;
                side[pair_seq[i].second] = 0;
            }
            improved = true;
        }
    }

    Allocation alloc;
    alloc.qpu_capacities = {sizes.first, sizes.second};
    alloc.assignment.assign(side.begin(), side.begin() + n);
    return alloc;
}

Allocation gpa_partition(const InteractionGraph& g, const QpuConfig& qpus) {
    const int n = g.num_qubits();
    if (qpus.total_capacity() < n)
        throw CapacityError("graph with " + std::to_string(n) + " qubits does not fit " +
                            std::to_string(qpus.total_capacity()) + " slots");

    std::vector<std::vector<std::pair<int, long long>>> adj(n);
    for (const auto& [e, weight] : g.edges()) {
        adj[e.first].emplace_back(e.second, weight);
        adj[e.second].emplace_back(e.first, weight);
    }

    // capacity descending, stable on original index
    std::vector<int> order(qpus.num_qpus());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return qpus.capacities[a] > qpus.capacities[b];
    });

    std::vector<int> assignment(n, -1);
    std::vector<long long> conn(n); // weight to the current supernode
    int remaining = n;

    for (int qpu : order) {
        if (remaining == 0) break;
        std::fill(conn.begin(), conn.end(), 0);
        int size = 0;
        const int cap = qpus.capacities[qpu];
        while (size < cap && remaining > 0) {
            int pick = -1;
            if (size == 0) {
                // seed with the smaller endpoint of the heaviest fully
                // unallocated edge
                long long best = 0;
                for (const auto& [e, weight] : g.edges()) {
                    if (assignment[e.first] != -1 || assignment[e.second] != -1) continue;
                    if (weight > best) {
                        best = weight;
                        pick = e.first;
                    }
                }
            } else {
                long long best = 0;
                for (int v = 0; v < n; ++v)
                    if (assignment[v] == -1 && conn[v] > best) {
                        best = conn[v];
                        pick = v;
                    }
            }
            if (pick == -1) break; // no connected candidate; leftovers handled below
            assignment[pick] = qpu;
            --remaining;
            ++size;
            for (const auto& [u, weight] : adj[pick])
                if (assignment[u] == -1) conn[u] += weight;
        }
    }

    // zero-connectivity leftovers fill remaining capacity in QPU order
    std::vector<int> fill(qpus.num_qpus(), 0);
    for (int v = 0; v < n; ++v)
        if (assignment[v] != -1) ++fill[assignment[v]];
    int next_qpu = 0;
    for (int v = 0; v < n; ++v) {
        if (assignment[v] != -1) continue;
        while (fill[next_qpu] >= qpus.capacities[next_qpu]) ++next_qpu;
        assignment[v] = next_qpu;
        ++fill[next_qpu];
    }

    Allocation alloc;
    alloc.qpu_capacities = qpus.capacities;
    alloc.assignment = std::move(assignment);
    return alloc;
}

namespace {

struct BruteForceSearch {
    const InteractionGraph& g;
    const QpuConfig& qpus;
    std::vector<std::vector<long long>> w;
    std::vector<int> assignment;
    std::vector<int> fill;
    std::vector<int> best_assignment;
    long long best_cost = std::numeric_limits<long long>::max();

    BruteForceSearch(const InteractionGraph& graph, const QpuConfig& config)
        : g(graph), qpus(config), w(dense_weights(graph, graph.num_qubits())),
          assignment(graph.num_qubits(), -1), fill(config.num_qpus(), 0) {}

    void recurse(int qubit, long long cost) {
        if (cost >= best_cost) return;
        if (qubit == g.num_qubits()) {
            best_cost = cost;
            best_assignment = assignment;
            return;
        }
        for (int q = 0; q < qpus.num_qpus(); ++q) {
            if (fill[q] >= qpus.capacities[q]) continue;
            // skip permutations of still-empty equal-capacity QPUs
            if (fill[q] == 0) {
                bool skip = false;
                for (int p = 0; p < q; ++p)
                    if (fill[p] == 0 && qpus.capacities[p] == qpus.capacities[q]) {
                        skip = true;
                        break;
                    }
                if (skip) continue;
            }
            long long extra = 0;
            for (int j = 0; j < qubit; ++j)
                if (assignment[j] != q) extra += w[qubit][j];
            assignment[qubit] = q;
            ++fill[q];
            recurse(qubit + 1, cost + extra);
            --fill[q];
            assignment[qubit] = -1;
        }
    }
};

}  // namespace

std::pair<Allocation, long long> brute_force_partition(const InteractionGraph& g,
                                                       const QpuConfig& qpus) {
    if (g.num_qubits() > 12)
        throw TooLarge("brute-force partition is limited to 12 qubits");
    if (qpus.total_capacity() < g.num_qubits())
        throw CapacityError("graph does not fit the QPU configuration");

    BruteForceSearch search(g, qpus);
    search.recurse(0, 0);
    Allocation alloc;
    alloc.qpu_capacities = qpus.capacities;
    alloc.assignment = std::move(search.best_assignment);
    return {std::move(alloc), search.best_cost};
}

}  // namespace qpart
