#include "qpart/interaction_graph.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "qpart/errors.hpp"

namespace qpart {

void InteractionGraph::add_cx(int u, int v, long long count) {
    if (u == v) throw InvalidSize("self-loop in interaction graph");
    if (u > v) std::swap(u, v);
    weights_[{u, v}] += count;
}

long long InteractionGraph::weight(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = weights_.find({u, v});
    return it == weights_.end() ? 0 : it->second;
}

long long InteractionGraph::total_weight() const {
    long long t = 0;
    for (const auto& [e, w] : weights_) t += w;
    return t;
}

std::string InteractionGraph::to_dot() const {
    std::ostringstream out;
    out << "graph interactions {\n";
    for (const auto& [e, w] : weights_)
        out << "  q" << e.first << " -- q" << e.second << " [label=\"" << w << "\"];\n";
    out << "}\n";
    return out.str();
}

std::vector<std::vector<int>> Allocation::groups() const {
    std::vector<std::vector<int>> g(qpu_capacities.size());
    for (int q = 0; q < static_cast<int>(assignment.size()); ++q)
        g[assignment[q]].push_back(q);
    return g;
}

bool Allocation::valid() const {
    std::vector<int> fill(qpu_capacities.size(), 0);
    for (int a : assignment) {
        if (a < 0 || a >= num_qpus()) return false;
        if (++fill[a] > qpu_capacities[a]) return false;
    }
    return true;
}

std::string Allocation::to_json() const {
    return nlohmann::json(assignment).dump();
}

InteractionGraph build_interaction_graph(const Circuit& c) {
    InteractionGraph g(c.num_qubits);
    for (const Gate& gate : c.gates)
        if (gate.is_cx()) g.add_cx(gate.q0, gate.q1);
    return g;
}

InteractionGraph build_interaction_graph(const Circuit& c, const BlockSlice& slice) {
    InteractionGraph g(c.num_qubits);
    for (int gi : slice.gate_indices) {
        const Gate& gate = c.gates.at(gi);
        if (gate.is_cx()) g.add_cx(gate.q0, gate.q1);
    }
    return g;
}

long long cut_cost(const InteractionGraph& g, const Allocation& a) {
    long long cost = 0;
    for (const auto& [e, w] : g.edges())
        if (a.assignment[e.first] != a.assignment[e.second]) cost += w;
    return cost;
}

}  // namespace qpart
