#include "qpart/qasm.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "qpart/errors.hpp"

namespace qpart {
namespace {

const std::set<std::string> kUnaryOps = {
    "id", "u0", "u1", "u2", "u3", "u",  "p",  "x",  "y",   "z",
    "h",  "s",  "sdg", "t",  "tdg", "rx", "ry", "rz", "sx", "sxdg"};

// Multi-qubit opcodes we recognise but do not support (no decomposition).
const std::set<std::string> kRejectedOps = {
    "cz", "cy", "ch", "swap", "crx", "cry", "crz", "cp",  "cu1", "cu2",
    "cu3", "cu", "ccx", "cswap", "rzz", "rxx", "ryy", "csx", "c3x", "c4x"};

std::string strip_comments(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '/' && i + 1 < text.size() && text[i + 1] == '/') {
            while (i < text.size() && text[i] != '\n') ++i;
            if (i < text.size()) out.push_back('\n');
        } else {
            out.push_back(text[i]);
        }
    }
    return out;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// One operand of a gate application: a whole register or a single element.
struct Operand {
    std::string reg;
    int index; // -1 means the whole register
};

struct Parser {
    std::vector<std::pair<std::string, int>> qregs; // name, size (declaration order)
    std::map<std::string, int> qreg_offset;
    std::map<std::string, int> qreg_size;
    std::set<std::string> cregs;
    std::set<std::string> user_unary; // in-file gate definitions with 1 qubit arg
    Circuit circuit;
    int seq = 0;

    int flat_index(const Operand& op) const {
        auto it = qreg_offset.find(op.reg);
        if (it == qreg_offset.end()) throw ParseError("unknown register '" + op.reg + "'");
        int size = qreg_size.at(op.reg);
        if (op.index < 0 || op.index >= size)
            throw IndexError("index " + std::to_string(op.index) + " out of bounds for '" +
                             op.reg + "[" + std::to_string(size) + "]'");
        return it->second + op.index;
    }

    static Operand parse_operand(const std::string& tok) {
        std::string t = trim(tok);
        if (t.empty()) throw ParseError("empty operand");
        size_t lb = t.find('[');
        if (lb == std::string::npos) return Operand{t, -1};
        size_t rb = t.find(']', lb);
        if (rb == std::string::npos) throw ParseError("missing ']' in '" + t + "'");
        std::string name = trim(t.substr(0, lb));
        std::string idx = trim(t.substr(lb + 1, rb - lb - 1));
        try {
            return Operand{name, std::stoi(idx)};
        } catch (const std::exception&) {
            throw ParseError("bad index in '" + t + "'");
        }
    }

    void declare_qreg(const std::string& body) {
        Operand op = parse_operand(body);
        if (op.index < 0) throw ParseError("qreg needs a size: '" + body + "'");
        if (op.index < 1) throw ParseError("qreg size must be positive");
        if (qreg_offset.count(op.reg)) throw ParseError("duplicate qreg '" + op.reg + "'");
        qreg_offset[op.reg] = circuit.num_qubits;
        qreg_size[op.reg] = op.index;
        qregs.emplace_back(op.reg, op.index);
        circuit.num_qubits += op.index;
    }

    void apply_unary(const Operand& op) {
        if (op.index >= 0) {
            circuit.gates.push_back(Gate::unary(flat_index(op), seq++));
            return;
        }
        // broadcast over the whole register
        auto it = qreg_size.find(op.reg);
        if (it == qreg_size.end()) throw ParseError("unknown register '" + op.reg + "'");
        for (int i = 0; i < it->second; ++i)
            circuit.gates.push_back(Gate::unary(qreg_offset.at(op.reg) + i, seq++));
    }

    void apply_cx(const Operand& a, const Operand& b) {
        auto width = [&](const Operand& op) {
            if (op.index >= 0) return 1;
            auto it = qreg_size.find(op.reg);
            if (it == qreg_size.end()) throw ParseError("unknown register '" + op.reg + "'");
            return it->second;
        };
        int wa = width(a), wb = width(b);
        if (wa != wb && wa != 1 && wb != 1)
            throw ParseError("cx operand width mismatch");
        int n = std::max(wa, wb);
        for (int i = 0; i < n; ++i) {
            Operand ca = a.index >= 0 ? a : Operand{a.reg, wa == 1 ? 0 : i};
            Operand cb = b.index >= 0 ? b : Operand{b.reg, wb == 1 ? 0 : i};
            int qc = flat_index(ca), qt = flat_index(cb);
            if (qc == qt) throw ParseError("cx control equals target");
            circuit.gates.push_back(Gate::cx(qc, qt, seq++));
        }
    }

    void statement(const std::string& raw) {
        std::string s = trim(raw);
        if (s.empty()) return;
        std::istringstream iss(s);
        std::string head;
        iss >> head;
        // strip a parameter list glued to the opcode, e.g. "rz(pi/2)"
        std::string opcode = head;
        size_t paren = head.find('(');
        if (paren != std::string::npos) opcode = head.substr(0, paren);

        if (opcode == "OPENQASM" || opcode == "include" || opcode == "barrier" ||
            opcode == "measure" || opcode == "reset" || opcode == "creg")
            return;
        if (opcode == "creg") return;
        if (opcode == "if") throw UnsupportedGate("classical control ('if') is not supported");
        if (opcode == "qreg") {
            std::string rest = trim(s.substr(s.find("qreg") + 4));
            declare_qreg(rest);
            return;
        }
        if (opcode == "opaque") throw UnsupportedGate("opaque declarations not supported");

        // gate application: everything after the opcode (and its optional
        // parameter list) is a comma-separated operand list
        std::string args = s.substr(head.size());
        if (paren != std::string::npos && head.find(')') == std::string::npos) {
            // parameter list contained whitespace; skip to the closing paren
            size_t close = s.find(')');
            if (close == std::string::npos) throw ParseError("unbalanced '(' in '" + s + "'");
            args = s.substr(close + 1);
        }
        std::vector<Operand> ops;
        std::istringstream argss(args);
        std::string tok;
        while (std::getline(argss, tok, ',')) {
            tok = trim(tok);
            if (!tok.empty()) ops.push_back(parse_operand(tok));
        }
        if (ops.empty()) throw ParseError("gate '" + opcode + "' has no operands");

        if (opcode == "cx" || opcode == "CX") {
            if (ops.size() != 2) throw ParseError("cx takes exactly 2 operands");
            apply_cx(ops[0], ops[1]);
            return;
        }
        if (kUnaryOps.count(opcode) || user_unary.count(opcode)) {
            if (ops.size() != 1)
                throw ParseError("single-qubit gate '" + opcode + "' takes 1 operand");
            apply_unary(ops[0]);
            return;
        }
        if (kRejectedOps.count(opcode))
            throw UnsupportedGate("multi-qubit gate '" + opcode + "' is not supported");
        throw UnsupportedGate("unknown opcode '" + opcode + "'");
    }

    void gate_definition(const std::string& header) {
        // "gate name(params) q0, q1, ..." -- only 1-qubit definitions are callable
        std::string s = trim(header.substr(4));
        size_t paren = s.find('(');
        size_t name_end = s.find_first_of(" \t(");
        if (name_end == std::string::npos) throw ParseError("malformed gate definition");
        std::string name = s.substr(0, name_end);
        std::string qargs = paren == std::string::npos
                                ? s.substr(name_end)
                                : s.substr(s.find(')', paren) + 1);
        int arity = qargs.find_first_not_of(" \t") == std::string::npos
                        ? 0
                        : 1 + static_cast<int>(std::count(qargs.begin(), qargs.end(), ','));
        if (arity == 1) user_unary.insert(name);
        // wider definitions are only an error if actually applied
    }

    void run(const std::string& text) {
        std::string src = strip_comments(text);
        size_t i = 0;
        while (i < src.size()) {
            size_t semi = src.find(';', i);
            size_t brace = src.find('{', i);
            if (brace != std::string::npos && (semi == std::string::npos || brace < semi)) {
                std::string header = trim(src.substr(i, brace - i));
                if (header.rfind("gate", 0) != 0)
                    throw ParseError("unexpected '{' after '" + header + "'");
                gate_definition(header);
                size_t close = src.find('}', brace);
                if (close == std::string::npos) throw ParseError("unbalanced '{'");
                i = close + 1;
                continue;
            }
            if (semi == std::string::npos) {
                if (!trim(src.substr(i)).empty())
                    throw ParseError("trailing text without ';'");
                break;
            }
            statement(src.substr(i, semi - i));
            i = semi + 1;
        }
    }
};

}  // namespace

Circuit parse_qasm(const std::string& text) {
    Parser p;
    p.run(text);
    return std::move(p.circuit);
}

Circuit parse_qasm_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_qasm(ss.str());
}

std::string write_qasm(const Circuit& c) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    out << "qreg q[" << c.num_qubits << "];\n";
    for (const Gate& g : c.gates) {
        if (g.is_cx())
            out << "cx q[" << g.q0 << "],q[" << g.q1 << "];\n";
        else
            out << "id q[" << g.q0 << "];\n";
    }
    return out.str();
}

}  // namespace qpart
