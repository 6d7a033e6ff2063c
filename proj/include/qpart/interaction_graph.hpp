#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qpart/circuit.hpp"

namespace qpart {

/// Weighted undirected qubit-interaction graph. Edge weight counts the CX
/// gates between a qubit pair; missing entry means weight zero.
class InteractionGraph {
public:
    explicit InteractionGraph(int num_qubits) : num_qubits_(num_qubits) {}

    int num_qubits() const { return num_qubits_; }

    void add_cx(int u, int v, long long count = 1);

    long long weight(int u, int v) const;
    long long total_weight() const;

    const std::map<std::pair<int, int>, long long>& edges() const { return weights_; }

    std::string to_dot() const;

private:
    int num_qubits_;
    std::map<std::pair<int, int>, long long> weights_; // keyed by (min,max)
};

/// Assignment of every qubit to a QPU index, with the capacities it must
/// respect.
struct Allocation {
    std::vector<int> assignment;     // qubit -> QPU index
    std::vector<int> qpu_capacities;

    int num_qpus() const { return static_cast<int>(qpu_capacities.size()); }
    std::vector<std::vector<int>> groups() const; // qubits per QPU
    bool valid() const;
    std::string to_json() const;
};

InteractionGraph build_interaction_graph(const Circuit& c);
InteractionGraph build_interaction_graph(const Circuit& c, const BlockSlice& slice);

/// Total weight of edges whose endpoints sit on different QPUs: the gate
/// teleportation Bell pairs for this slice.
long long cut_cost(const InteractionGraph& g, const Allocation& a);

}  // namespace qpart
