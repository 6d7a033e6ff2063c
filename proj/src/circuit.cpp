#include "qpart/circuit.hpp"

#include <algorithm>
#include <random>

#include "json.hpp"
#include "qpart/errors.hpp"

namespace qpart {

int Circuit::cx_count() const {
    return static_cast<int>(
        std::count_if(gates.begin(), gates.end(), [](const Gate& g) { return g.is_cx(); }));
}

int Circuit::unary_count() const {
    return static_cast<int>(gates.size()) - cx_count();
}

Circuit Circuit::cx_only() const {
    Circuit out;
    out.num_qubits = num_qubits;
    for (const Gate& g : gates)
        if (g.is_cx()) out.gates.push_back(g);
    return out;
}

std::string Circuit::to_json() const {
    nlohmann::json j;
    j["num_qubits"] = num_qubits;
    auto& arr = j["gates"] = nlohmann::json::array();
    for (const Gate& g : gates) {
        nlohmann::json jg;
        jg["kind"] = g.is_cx() ? "cx" : "unary";
        jg["qubits"] = g.is_cx() ? std::vector<int>{g.q0, g.q1} : std::vector<int>{g.q0};
        jg["seq"] = g.seq;
        arr.push_back(std::move(jg));
    }
    return j.dump(2);
}

LayeredCircuit layerize(const Circuit& c) {
    LayeredCircuit lc;
    lc.circuit = c;
    std::vector<int> frontier(c.num_qubits, -1); // last layer touching each qubit
    for (int gi = 0; gi < static_cast<int>(c.gates.size()); ++gi) {
        const Gate& g = c.gates[gi];
        int layer = frontier[g.q0] + 1;
        if (g.is_cx()) layer = std::max(layer, frontier[g.q1] + 1);
        if (layer >= static_cast<int>(lc.layers.size())) lc.layers.resize(layer + 1);
        lc.layers[layer].push_back(gi);
        frontier[g.q0] = layer;
        if (g.is_cx()) frontier[g.q1] = layer;
    }
    return lc;
}

std::vector<BlockSlice> slice_blocks(const LayeredCircuit& lc,
                                     const std::vector<int>& block_depths) {
    long long sum = 0;
    for (int d : block_depths) {
        if (d < 0) throw SumMismatch("negative block depth");
        sum += d;
    }
    if (sum != lc.depth())
        throw SumMismatch("block depths sum to " + std::to_string(sum) + ", circuit depth is " +
                          std::to_string(lc.depth()));

    std::vector<BlockSlice> slices;
    int layer = 0;
    for (int d : block_depths) {
        if (d == 0) continue;
        BlockSlice s;
        s.layer_begin = layer;
        s.layer_end = layer + d;
        for (int l = s.layer_begin; l < s.layer_end; ++l)
            s.gate_indices.insert(s.gate_indices.end(), lc.layers[l].begin(), lc.layers[l].end());
        slices.push_back(std::move(s));
        layer += d;
    }
    return slices;
}

Circuit generate_random_circuit(int num_qubits, int num_cx, std::uint64_t rng_seed) {
    if (num_qubits < 2) throw InvalidSize("random circuit needs at least 2 qubits");
    std::mt19937_64 rng(rng_seed);
    std::uniform_int_distribution<int> pick_control(0, num_qubits - 1);
    std::uniform_int_distribution<int> pick_other(0, num_qubits - 2);
    Circuit c;
    c.num_qubits = num_qubits;
    c.gates.reserve(num_cx);
    for (int i = 0; i < num_cx; ++i) {
        int control = pick_control(rng);
        int target = pick_other(rng);
        if (target >= control) ++target;
        c.gates.push_back(Gate::cx(control, target, i));
    }
    return c;
}

}  // namespace qpart
