#include "qet.hpp"

#include <algorithm>
#include <cmath>

#include "model.hpp"  // NumericalError

namespace polaron {

Circuit sin_block_encoding(int m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    const int a = m;
    Circuit c;
    c.num_qubits = m + 1;
    c.append(Gate{GateKind::Ry, a, -2.0, {}});
    for (int j = 0; j < m; ++j) {
        const double theta = 2.0 * std::pow(2.0, j + 1 - m);
        c.append(Gate{GateKind::Ry, a, theta, {{j, true}}});
    }
    c.append(Gate{GateKind::X, a, 0.0, {}});
    return c;
}

Circuit qsp_real_circuit(const PhaseFactorSet& phases, const Circuit& be) {
    const int m = be.num_qubits - 1;
    const int a = m, q0 = m + 1, q1 = m + 2;
    const int d = phases.degree;
    std::vector<double> vp = phases.varphi_angles();
    if ((d / 2) % 2 == 1 && d >= 2) vp[1] += M_PI;  // fold out the (-1)^{d/2} sign

    Circuit c;
    c.num_qubits = m + 3;
    auto branch_phases = [&](double angle) {
        // branch q1 = 0 applies exp(i angle Z) on the block ancilla, branch
        // q1 = 1 the conjugate; both only when the dump qubit q0 is 0
        c.append(Gate{GateKind::Rz, a, -2.0 * angle, {{q0, false}, {q1, false}}});
        c.append(Gate{GateKind::Rz, a, +2.0 * angle, {{q0, false}, {q1, true}}});
    };

    c.append(Gate{GateKind::H, q0, 0.0, {}});
    c.append(Gate{GateKind::H, q1, 0.0, {}});
    for (int j = d; j >= 1; --j) {
        branch_phases(vp[static_cast<std::size_t>(j)]);
        c.append(be);
    }
    branch_phases(vp[0]);
    c.append(Gate{GateKind::X, a, 0.0, {{q0, true}}});  // identity-dump branch
    c.append(Gate{GateKind::H, q0, 0.0, {}});
    c.append(Gate{GateKind::H, q1, 0.0, {}});
    return c;
}

int m_prime_of(double p_succ) {
    if (p_succ <= 0.0 || p_succ > 1.0) throw std::invalid_argument("p_succ must be in (0, 1]");
    const double a = std::asin(std::sqrt(p_succ));
    return static_cast<int>(std::ceil(M_PI / (4.0 * a) - 0.5));
}

AmplificationPlan plan_amplification(const ChebyshevPolynomial& p, int m) {
    const std::int64_t M = std::int64_t(1) << m;
    double sum = 0.0, mx = 0.0;
    for (std::int64_t y = 0; y < M; ++y) {
        const double s = std::sin(2.0 * double(y) / double(M) - 1.0);
        const double v = p.eval(s);
        sum += v * v;
        mx = std::max(mx, std::abs(v));
    }
    if (mx == 0.0) throw std::invalid_argument("degenerate polynomial: p_succ = 0");
    AmplificationPlan plan;
    const double amp = 0.5 * std::sqrt(sum) / std::sqrt(double(M) * mx * mx);
    plan.p_succ = amp * amp;
    plan.m_prime = m_prime_of(plan.p_succ);
    return plan;
}

double success_probability(const State& psi, int m) {
    const std::size_t M = std::size_t(1) << m;
    double s = 0.0;
    for (std::size_t y = 0; y < M; ++y) s += std::norm(psi[y]);
    return s;
}

State postselect_data(const State& psi, int m) {
    const std::size_t M = std::size_t(1) << m;
    State out(psi.begin(), psi.begin() + static_cast<std::ptrdiff_t>(M));
    double n = 0.0;
    for (const auto& v : out) n += std::norm(v);
    if (n <= 0.0) throw NumericalError("postselection has zero weight");
    const double inv = 1.0 / std::sqrt(n);
    for (auto& v : out) v *= inv;
    return out;
}

namespace {

// phase exp(i ang) on the marker subspace (all three ancillas zero)
void append_marker_phase(Circuit& c, int m, double ang) {
    const int a = m, q0 = m + 1, q1 = m + 2;
    c.append(Gate{GateKind::X, a, 0.0, {}});
    c.append(Gate{GateKind::Phase, a, ang, {{q0, false}, {q1, false}}});
    c.append(Gate{GateKind::X, a, 0.0, {}});
}

// phase exp(i ang) on the all-zero state of the full register
void append_zero_phase(Circuit& c, int n, double ang) {
    Gate g{GateKind::Phase, 0, ang, {}};
    for (int q = 1; q < n; ++q) g.controls.push_back({q, false});
    c.append(Gate{GateKind::X, 0, 0.0, {}});
    c.append(g);
    c.append(Gate{GateKind::X, 0, 0.0, {}});
    // Phase acts on |1> of the (flipped) target, so the pair of X gates moves
    // it onto the |0...0> component.
}

void append_global_minus(Circuit& c, int q) {
    // X Z X Z = -I on any single qubit
    c.append(Gate{GateKind::X, q, 0.0, {}});
    c.append(Gate{GateKind::Z, q, 0.0, {}});
    c.append(Gate{GateKind::X, q, 0.0, {}});
    c.append(Gate{GateKind::Z, q, 0.0, {}});
}

}  // namespace

VacuumPrep prepare_vacuum_u0(int m, double W, int d) {
    VacuumPrep vp;
    vp.poly = approx_gaussian_poly(W, d);
    vp.phases = solve_phase_factors(vp.poly, 1e-8);
    vp.plan = plan_amplification(vp.poly, m);

    const Circuit be = sin_block_encoding(m);
    Circuit A;
    A.num_qubits = m + 3;
    for (int q = 0; q < m; ++q) A.append(Gate{GateKind::H, q, 0.0, {}});
    A.append(qsp_real_circuit(vp.phases, be));
    const Circuit Adag = A.inverse();

    // exact amplification phases from the simulated success amplitude
    const State after = simulate(A, basis_state(m + 3));
    vp.p_initial = success_probability(after, m);
    const double theta = std::asin(std::sqrt(vp.p_initial));
    const int mp = vp.plan.m_prime;
    const double phi = 2.0 * std::asin(std::sin(M_PI / (4.0 * mp + 2.0)) / std::sin(theta));

    Circuit c = A;
    for (int r = 0; r < mp; ++r) {
        append_marker_phase(c, m, phi);
        c.append(Adag);
        append_zero_phase(c, m + 3, phi);
        c.append(A);
        append_global_minus(c, m);
    }
    vp.circuit = std::move(c);
    return vp;
}

}  // namespace polaron
