#include "fragments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polaron {

GridSpec default_grid(int m, double alpha, double sigma) {
    GridSpec g;
    g.m = m;
    g.sigma = sigma;
    g.W = std::max(6.0, std::sqrt(2.0) * std::abs(alpha) * sigma + 6.0 * sigma);
    return g;
}

std::vector<int> RegisterLayout::electron_qubits() const {
    std::vector<int> q(static_cast<std::size_t>(k_E));
    for (int i = 0; i < k_E; ++i) q[static_cast<std::size_t>(i)] = i;
    return q;
}

std::vector<int> RegisterLayout::phonon_register(int site) const {
    if (site < 0 || site >= N) throw std::out_of_range("site");
    std::vector<int> q(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) q[static_cast<std::size_t>(i)] = k_E + site * m + i;
    return q;
}

RegisterLayout layout_of(const ModelParams& p, const GridSpec& grid) {
    p.validate();
    RegisterLayout lay;
    lay.N = p.N;
    lay.m = grid.m;
    lay.k_E = 0;
    while ((1 << lay.k_E) < p.N) ++lay.k_E;
    return lay;
}

namespace {

void append_swap(Circuit& c, int a, int b) {
    Gate g1{GateKind::X, b, 0.0, {{a, true}}};
    Gate g2{GateKind::X, a, 0.0, {{b, true}}};
    c.append(g1);
    c.append(g2);
    c.append(g1);
}

}  // namespace

Circuit qft_fragment(const std::vector<int>& reg, int num_qubits) {
    if (reg.empty()) throw std::invalid_argument("qft_fragment: empty register");
    const int m = static_cast<int>(reg.size());
    Circuit c;
    c.num_qubits = num_qubits;
    for (int t = m - 1; t >= 0; --t) {
        c.append(Gate{GateKind::H, reg[static_cast<std::size_t>(t)], 0.0, {}});
        for (int ctl = t - 1; ctl >= 0; --ctl) {
            const double angle = M_PI / double(std::uint64_t(1) << (t - ctl));
            c.append(Gate{GateKind::Phase, reg[static_cast<std::size_t>(t)], angle,
                          {{reg[static_cast<std::size_t>(ctl)], true}}});
        }
    }
    for (int i = 0; i < m / 2; ++i)
        append_swap(c, reg[static_cast<std::size_t>(i)], reg[static_cast<std::size_t>(m - 1 - i)]);
    return c;
}

Circuit iqft_fragment(const std::vector<int>& reg, int num_qubits) {
    return qft_fragment(reg, num_qubits).inverse();
}

Circuit displacement_fragment(const GridSpec& grid, double alpha) {
    const int m = grid.m;
    std::vector<int> reg(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) reg[static_cast<std::size_t>(i)] = i;
    const double x0 = std::sqrt(2.0) * alpha * grid.sigma;
    Circuit c;
    c.num_qubits = m;
    c.append(qft_fragment(reg, m));
    for (int l = 0; l < m; ++l) {
        // wrapped momentum: the top bit contributes 2^{m-1} - 2^m so that k maps
        // to the signed frequency k - M [k >= M/2]; without it non-integer
        // shifts tear the state at the Nyquist line
        const double weight = (l == m - 1) ? -double(std::uint64_t(1) << l)
                                           : double(std::uint64_t(1) << l);
        c.append(Gate{GateKind::Rz, l, x0 * grid.dp() * weight, {}});
    }
    c.append(iqft_fragment(reg, m));
    return c;
}

Circuit controlled_fragment(const Circuit& inner, const std::vector<int>& electron_register,
                            int site) {
    if (site < 0 || site >= (1 << electron_register.size()))
        throw std::out_of_range("site out of range for the electron register");
    Circuit out;
    out.num_qubits = inner.num_qubits;
    out.gates.reserve(inner.gates.size());
    for (Gate g : inner.gates) {
        if (g.kind == GateKind::Rz) {  // only the phase-gradient block is controlled
            for (std::size_t b = 0; b < electron_register.size(); ++b)
                g.controls.push_back({electron_register[b], ((site >> b) & 1) != 0});
        }
        out.gates.push_back(std::move(g));
    }
    return out;
}

Circuit build_lf_circuit(const ModelParams& p, double alpha, const GridSpec& grid,
                         const Circuit& u0) {
    const RegisterLayout lay = layout_of(p, grid);
    if (u0.num_qubits > lay.m)
        throw std::invalid_argument("u0 must act on a single m-qubit register");
    Circuit c;
    c.num_qubits = lay.q_total();
    for (int q : lay.electron_qubits()) c.append(Gate{GateKind::H, q, 0.0, {}});
    for (int site = 0; site < p.N; ++site)
        c.append(remap(u0, lay.phonon_register(site), c.num_qubits));
    const Circuit disp = displacement_fragment(grid, -alpha);
    for (int site = 0; site < p.N; ++site) {
        Circuit inner = remap(disp, lay.phonon_register(site), c.num_qubits);
        c.append(controlled_fragment(inner, lay.electron_qubits(), site));
    }
    return c;
}

namespace {

std::vector<double> normalized_gaussian(const GridSpec& grid, double center) {
    const std::int64_t M = grid.points();
    std::vector<double> v(static_cast<std::size_t>(M));
    double n2 = 0.0;
    for (std::int64_t j = 0; j < M; ++j) {
        const double d = (grid.x(j) - center) / grid.sigma;
        v[static_cast<std::size_t>(j)] = std::exp(-0.5 * d * d);
        n2 += v[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(j)];
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (double& a : v) a *= inv;
    return v;
}

State to_state(const std::vector<double>& v) {
    State s(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) s[i] = v[i];
    return s;
}

}  // namespace

State grid_vacuum(const GridSpec& grid) { return to_state(normalized_gaussian(grid, 0.0)); }

State grid_coherent(const GridSpec& grid, double alpha) {
    return to_state(normalized_gaussian(grid, -std::sqrt(2.0) * alpha * grid.sigma));
}

State grid_lf_state(const ModelParams& p, double alpha, const GridSpec& grid) {
    const RegisterLayout lay = layout_of(p, grid);
    if (lay.q_total() > kMaxSimQubits)
        throw std::invalid_argument("layout exceeds the dense simulation cap");
    const std::vector<double> vac = normalized_gaussian(grid, 0.0);
    const std::vector<double> coh =
        normalized_gaussian(grid, -std::sqrt(2.0) * alpha * grid.sigma);

    State psi(std::size_t(1) << lay.q_total(), {0.0, 0.0});
    const double pref = 1.0 / std::sqrt(double(p.N));
    for (int e = 0; e < p.N; ++e) {
        // phonon product vector, register r stacked at bit offset r*m
        std::vector<double> prod{1.0};
        for (int r = 0; r < p.N; ++r) {
            const std::vector<double>& v = (r == e) ? coh : vac;
            std::vector<double> next(prod.size() * v.size());
            for (std::size_t jr = 0; jr < v.size(); ++jr)
                for (std::size_t i = 0; i < prod.size(); ++i)
                    next[jr * prod.size() + i] = v[jr] * prod[i];
            prod = std::move(next);
        }
        for (std::size_t pj = 0; pj < prod.size(); ++pj)
            psi[(pj << lay.k_E) | std::size_t(e)] += pref * prod[pj];
    }
    return psi;
}

double fidelity_grid_lf(const State& state, const ModelParams& p, double alpha,
                        const GridSpec& grid) {
    const State ref = grid_lf_state(p, alpha, grid);
    if (ref.size() != state.size()) throw std::invalid_argument("fidelity_grid_lf: dimension mismatch");
    return fidelity(ref, state);
}

Circuit exact_state_prep(const std::vector<double>& target_amplitudes) {
    const std::size_t M = target_amplitudes.size();
    int m = 0;
    while ((std::size_t(1) << m) < M) ++m;
    if ((std::size_t(1) << m) != M) throw std::invalid_argument("target size must be a power of two");
    for (double a : target_amplitudes)
        if (a < 0.0) throw std::invalid_argument("exact_state_prep expects nonnegative amplitudes");

    std::vector<double> prob(M);
    for (std::size_t i = 0; i < M; ++i) prob[i] = target_amplitudes[i] * target_amplitudes[i];

    Circuit c;
    c.num_qubits = m;
    for (int b = m - 1; b >= 0; --b) {
        const std::size_t prefixes = std::size_t(1) << (m - 1 - b);
        const std::size_t block = std::size_t(1) << b;
        for (std::size_t v = 0; v < prefixes; ++v) {
            double s0 = 0.0, s1 = 0.0;
            const std::size_t base = v << (b + 1);
            for (std::size_t low = 0; low < block; ++low) {
                s0 += prob[base | low];
                s1 += prob[base | block | low];
            }
            if (s0 + s1 <= 0.0) continue;
            const double theta = 2.0 * std::atan2(std::sqrt(s1), std::sqrt(s0));
            if (theta == 0.0) continue;
            Gate g{GateKind::Ry, b, theta, {}};
            for (int q = b + 1; q < m; ++q)
                g.controls.push_back({q, ((v >> (q - b - 1)) & 1) != 0});
            c.append(std::move(g));
        }
    }
    return c;
}

Circuit exact_vacuum_u0(const GridSpec& grid) {
    return exact_state_prep(normalized_gaussian(grid, 0.0));
}

}  // namespace polaron
