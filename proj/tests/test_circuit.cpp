#include <doctest.h>

#include <cmath>
#include <complex>

#include "circuit.hpp"
#include "simulate.hpp"

using namespace polaron;

namespace {

using cd = std::complex<double>;

bool unitary2(const std::array<cd, 4>& u) {
    const cd a = u[0], b = u[1], c = u[2], d = u[3];
    return std::abs(std::norm(a) + std::norm(c) - 1.0) < 1e-12 &&
           std::abs(std::norm(b) + std::norm(d) - 1.0) < 1e-12 &&
           std::abs(std::conj(a) * b + std::conj(c) * d) < 1e-12;
}

}  // namespace

TEST_CASE("gate matrices match the stated conventions") {
    const double th = 0.37;
    auto ry = gate_matrix({GateKind::Ry, 0, th, {}});
    CHECK(ry[0].real() == doctest::Approx(std::cos(th / 2)));
    CHECK(ry[1].real() == doctest::Approx(-std::sin(th / 2)));
    CHECK(ry[2].real() == doctest::Approx(std::sin(th / 2)));
    auto rz = gate_matrix({GateKind::Rz, 0, th, {}});
    CHECK(std::abs(rz[0] - cd(std::cos(th / 2), -std::sin(th / 2))) < 1e-15);
    CHECK(std::abs(rz[3] - cd(std::cos(th / 2), std::sin(th / 2))) < 1e-15);
    CHECK(std::abs(rz[1]) == 0.0);
    auto ph = gate_matrix({GateKind::Phase, 0, th, {}});
    CHECK(std::abs(ph[0] - cd(1.0)) == 0.0);
    CHECK(std::abs(ph[3] - cd(std::cos(th), std::sin(th))) < 1e-15);
    for (auto kind : {GateKind::H, GateKind::X, GateKind::Z, GateKind::Ry, GateKind::Rz,
                      GateKind::Phase})
        CHECK(unitary2(gate_matrix({kind, 0, 0.81, {}})));
}

TEST_CASE("inverse undoes the circuit") {
    Circuit c;
    c.num_qubits = 3;
    c.append({GateKind::H, 0, 0.0, {}});
    c.append({GateKind::Ry, 1, 0.9, {{0, true}}});
    c.append({GateKind::Phase, 2, 1.3, {{1, false}, {0, true}}});
    c.append({GateKind::Rz, 0, -2.1, {{2, true}}});
    Circuit round = c;
    round.append(c.inverse());
    State init = basis_state(3, 5);
    State out = simulate(round, init);
    CHECK(std::abs(fidelity(out, init) - 1.0) <= 1e-12);
}

TEST_CASE("text round trip preserves gates exactly") {
    Circuit c;
    c.num_qubits = 4;
    c.append({GateKind::H, 2, 0.0, {}});
    c.append({GateKind::X, 0, 0.0, {{3, false}}});
    c.append({GateKind::Rz, 1, 0.12345678901234567, {{0, true}, {2, false}}});
    c.append({GateKind::Phase, 3, -M_PI / 3.0, {}});
    Circuit back = from_text(to_text(c));
    REQUIRE(back.gates.size() == c.gates.size());
    CHECK(back.num_qubits == c.num_qubits);
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        CHECK(back.gates[i].kind == c.gates[i].kind);
        CHECK(back.gates[i].target == c.gates[i].target);
        CHECK(back.gates[i].angle == c.gates[i].angle);  // 17 digits: bit-exact
        REQUIRE(back.gates[i].controls.size() == c.gates[i].controls.size());
        for (std::size_t j = 0; j < c.gates[i].controls.size(); ++j) {
            CHECK(back.gates[i].controls[j].qubit == c.gates[i].controls[j].qubit);
            CHECK(back.gates[i].controls[j].positive == c.gates[i].controls[j].positive);
        }
    }
}

TEST_CASE("validate rejects malformed gates") {
    Circuit c;
    c.num_qubits = 2;
    c.append({GateKind::H, 2, 0.0, {}});
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.gates.clear();
    c.append({GateKind::X, 0, 0.0, {{0, true}}});  // target equals control
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.gates.clear();
    c.append({GateKind::Rz, 0, std::nan(""), {}});
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("remap relocates targets and controls") {
    Circuit c;
    c.num_qubits = 2;
    c.append({GateKind::X, 1, 0.0, {{0, false}}});
    Circuit wide = remap(c, {3, 1}, 5);
    CHECK(wide.num_qubits == 5);
    CHECK(wide.gates[0].target == 1);
    CHECK(wide.gates[0].controls[0].qubit == 3);
    CHECK_FALSE(wide.gates[0].controls[0].positive);
}

TEST_CASE("controls gate the action") {
    Circuit c;
    c.num_qubits = 2;
    c.append({GateKind::X, 1, 0.0, {{0, true}}});
    CHECK(std::abs(fidelity(simulate(c, basis_state(2, 0)), basis_state(2, 0)) - 1.0) <= 1e-12);
    CHECK(std::abs(fidelity(simulate(c, basis_state(2, 1)), basis_state(2, 3)) - 1.0) <= 1e-12);
    c.gates[0].controls[0].positive = false;
    CHECK(std::abs(fidelity(simulate(c, basis_state(2, 0)), basis_state(2, 2)) - 1.0) <= 1e-12);
}

TEST_CASE("serial and parallel kernels agree") {
    Circuit c;
    c.num_qubits = 5;
    for (int q = 0; q < 5; ++q) c.append({GateKind::H, q, 0.0, {}});
    for (int q = 0; q < 4; ++q) c.append({GateKind::Phase, q + 1, 0.3 * (q + 1), {{q, true}}});
    for (int q = 0; q < 5; ++q) c.append({GateKind::Ry, q, 0.1 + 0.2 * q, {}});
    State a = simulate(c, basis_state(5));
    State b = simulate_serial(c, basis_state(5));
    double diff = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) diff = std::max(diff, std::abs(a[i] - b[i]));
    CHECK(diff < 1e-13);
}
