#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qpart {

enum class GateKind { Unary, CX };

/// One gate in a flattened circuit. For CX the control index comes first.
struct Gate {
    GateKind kind;
    int q0;
    int q1;  // -1 for unary gates
    int seq; // original program order

    static Gate unary(int q, int seq) { return Gate{GateKind::Unary, q, -1, seq}; }
    static Gate cx(int control, int target, int seq) {
        return Gate{GateKind::CX, control, target, seq};
    }
    bool is_cx() const { return kind == GateKind::CX; }
};

struct Circuit {
    int num_qubits = 0;
    std::vector<Gate> gates;

    int cx_count() const;
    int unary_count() const;

    /// Circuit containing only the CX gates, seq preserved.
    Circuit cx_only() const;

    std::string to_json() const;
};

/// ASAP layer decomposition: a gate sits in layer 1 + max(layer of its
/// latest predecessor on any shared qubit), or layer 0 if it has none.
struct LayeredCircuit {
    Circuit circuit;
    std::vector<std::vector<int>> layers; // gate indices per layer
    int depth() const { return static_cast<int>(layers.size()); }
};

/// Half-open layer range plus the gate indices whose layer falls inside it.
struct BlockSlice {
    int layer_begin;
    int layer_end;
    std::vector<int> gate_indices;
};

LayeredCircuit layerize(const Circuit& c);

/// Split layers into blocks of the given depths. Zero depths produce no
/// slice. Throws SumMismatch unless the depths sum to lc.depth().
std::vector<BlockSlice> slice_blocks(const LayeredCircuit& lc,
                                     const std::vector<int>& block_depths);

/// CNOT-only circuit on uniformly random ordered pairs of distinct qubits.
Circuit generate_random_circuit(int num_qubits, int num_cx, std::uint64_t rng_seed);

}  // namespace qpart
