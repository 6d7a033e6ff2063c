#pragma once

#include <string>

#include "qpart/circuit.hpp"

namespace qpart {

/// Parse an OpenQASM 2.0 program restricted to single-qubit gates, `cx`,
/// `measure`, `barrier` and register declarations. All quantum registers
/// are flattened into one index space in declaration order; measurements,
/// barriers and classical registers are ignored.
Circuit parse_qasm(const std::string& text);

Circuit parse_qasm_file(const std::string& path);

/// Emit the circuit back as OpenQASM 2.0 (unary gates as `id`).
std::string write_qasm(const Circuit& c);

}  // namespace qpart
