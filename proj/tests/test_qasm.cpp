#include "doctest.h"
#include "qpart/circuit.hpp"
#include "qpart/errors.hpp"
#include "qpart/qasm.hpp"

using namespace qpart;

TEST_CASE("empty program with one register") {
    Circuit c = parse_qasm("OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[3];\n");
    CHECK(c.num_qubits == 3);
    CHECK(c.gates.empty());
}

TEST_CASE("ccx is rejected") {
    CHECK_THROWS_AS(parse_qasm("qreg q[3]; ccx q[0],q[1],q[2];"), UnsupportedGate);
}

TEST_CASE("unknown opcode is rejected") {
    CHECK_THROWS_AS(parse_qasm("qreg q[2]; frobnicate q[0];"), UnsupportedGate);
}

TEST_CASE("classical control is rejected") {
    CHECK_THROWS_AS(parse_qasm("qreg q[1]; creg c[1]; if (c==1) x q[0];"), UnsupportedGate);
}

TEST_CASE("out-of-bounds index") {
    CHECK_THROWS_AS(parse_qasm("qreg q[2]; cx q[0],q[2];"), IndexError);
}

TEST_CASE("malformed syntax") {
    CHECK_THROWS_AS(parse_qasm("qreg q[two];"), ParseError);
    CHECK_THROWS_AS(parse_qasm("qreg q[2]; cx q[0;"), ParseError);
}

TEST_CASE("multi-register flattening in declaration order") {
    Circuit c = parse_qasm("qreg a[2]; qreg b[3]; cx a[1],b[0]; h b[2];");
    CHECK(c.num_qubits == 5);
    REQUIRE(c.gates.size() == 2);
    CHECK(c.gates[0].q0 == 1);
    CHECK(c.gates[0].q1 == 2);
    CHECK(c.gates[1].q0 == 4);
}

TEST_CASE("measure, barrier and creg are ignored") {
    Circuit c = parse_qasm(
        "qreg q[2]; creg c[2]; h q[0]; barrier q; cx q[0],q[1];"
        "measure q[0] -> c[0]; measure q[1] -> c[1];");
    CHECK(c.gates.size() == 2);
    CHECK(c.cx_count() == 1);
    CHECK(c.unary_count() == 1);
}

TEST_CASE("parameterised unary gates") {
    Circuit c = parse_qasm("qreg q[2]; rz(pi/2) q[0]; u3(0.1, 0.2, 0.3) q[1]; u1(-0.5) q[0];");
    CHECK(c.unary_count() == 3);
}

TEST_CASE("unary broadcast over a whole register") {
    Circuit c = parse_qasm("qreg q[4]; h q;");
    CHECK(c.unary_count() == 4);
}

TEST_CASE("in-file single-qubit gate definition") {
    Circuit c = parse_qasm(
        "qreg q[2];\n"
        "gate mygate(theta) a { rz(theta) a; h a; }\n"
        "mygate(0.3) q[1];\n");
    REQUIRE(c.gates.size() == 1);
    CHECK(c.gates[0].q0 == 1);
    CHECK(c.gates[0].kind == GateKind::Unary);
}

TEST_CASE("fixture file has hand-counted totals") {
    Circuit c = parse_qasm_file(std::string(QPART_FIXTURE_DIR) + "/fixture20.qasm");
    CHECK(c.num_qubits == 4);
    CHECK(c.gates.size() == 20);
    CHECK(c.cx_count() == 12);
    CHECK(c.unary_count() == 8);
    CHECK(layerize(c.cx_only()).depth() == 10);
}

TEST_CASE("qasm round trip through randgen output") {
    Circuit c = generate_random_circuit(5, 40, 11);
    Circuit back = parse_qasm(write_qasm(c));
    REQUIRE(back.gates.size() == c.gates.size());
    CHECK(back.num_qubits == 5);
    for (size_t i = 0; i < c.gates.size(); ++i) {
        CHECK(back.gates[i].q0 == c.gates[i].q0);
        CHECK(back.gates[i].q1 == c.gates[i].q1);
    }
}
