#include "simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polaron {

namespace {

struct ControlMask {
    std::uint64_t mask = 0;
    std::uint64_t value = 0;
};

ControlMask control_mask(const Gate& g) {
    ControlMask cm;
    for (const Control& c : g.controls) {
        const std::uint64_t bit = std::uint64_t(1) << c.qubit;
        cm.mask |= bit;
        if (c.positive) cm.value |= bit;
    }
    return cm;
}

inline std::uint64_t insert_zero_bit(std::uint64_t k, int pos) {
    const std::uint64_t low = k & ((std::uint64_t(1) << pos) - 1);
    return ((k >> pos) << (pos + 1)) | low;
}

void check_state(const State& psi, int num_qubits) {
    if (psi.size() != (std::size_t(1) << num_qubits))
        throw std::invalid_argument("state dimension does not match circuit width");
}

void check_norm(const State& psi) {
    const double n = norm(psi);
    if (!std::isfinite(n)) throw std::runtime_error("non-finite amplitude detected");
    if (std::abs(n - 1.0) > 1e-10) throw std::runtime_error("simulate: norm drift above 1e-10");
}

}  // namespace

State basis_state(int num_qubits, std::uint64_t index) {
    State psi(std::size_t(1) << num_qubits, {0.0, 0.0});
    psi[index] = 1.0;
    return psi;
}

void apply_gate_parallel(State& psi, const Gate& g) {
    const auto m = gate_matrix(g);
    const ControlMask cm = control_mask(g);
    const std::uint64_t tbit = std::uint64_t(1) << g.target;
    const std::int64_t half = static_cast<std::int64_t>(psi.size() >> 1);
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < half; ++k) {
        const std::uint64_t i0 = insert_zero_bit(static_cast<std::uint64_t>(k), g.target);
        if ((i0 & cm.mask) != cm.value) continue;
        const std::uint64_t i1 = i0 | tbit;
        const std::complex<double> a = psi[i0], b = psi[i1];
        psi[i0] = m[0] * a + m[1] * b;
        psi[i1] = m[2] * a + m[3] * b;
    }
}

void apply_gate_serial(State& psi, const Gate& g) {
    const auto m = gate_matrix(g);
    const ControlMask cm = control_mask(g);
    const std::uint64_t tbit = std::uint64_t(1) << g.target;
    const std::uint64_t n = psi.size();
    for (std::uint64_t i0 = 0; i0 < n; ++i0) {
        if (i0 & tbit) continue;
        if ((i0 & cm.mask) != cm.value) continue;
        const std::uint64_t i1 = i0 | tbit;
        const std::complex<double> a = psi[i0], b = psi[i1];
        psi[i0] = m[0] * a + m[1] * b;
        psi[i1] = m[2] * a + m[3] * b;
    }
}

State simulate(const Circuit& c, State init) {
    if (c.num_qubits > kMaxSimQubits)
        throw std::invalid_argument("layout exceeds the dense simulation cap of 26 qubits");
    check_state(init, c.num_qubits);
    c.validate();
    for (const Gate& g : c.gates) apply_gate_parallel(init, g);
    check_norm(init);
    return init;
}

State simulate_serial(const Circuit& c, State init) {
    if (c.num_qubits > kMaxSimQubits)
        throw std::invalid_argument("layout exceeds the dense simulation cap of 26 qubits");
    check_state(init, c.num_qubits);
    c.validate();
    for (const Gate& g : c.gates) apply_gate_serial(init, g);
    check_norm(init);
    return init;
}

double norm(const State& psi) {
    const std::int64_t n = static_cast<std::int64_t>(psi.size());
    const std::int64_t chunk = 4096;
    const std::int64_t nchunks = (n + chunk - 1) / chunk;
    std::vector<double> partial(static_cast<std::size_t>(nchunks), 0.0);
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < nchunks; ++c) {
        const std::int64_t lo = c * chunk, hi = std::min(n, lo + chunk);
        double s = 0.0;
        for (std::int64_t i = lo; i < hi; ++i) s += std::norm(psi[static_cast<std::size_t>(i)]);
        partial[static_cast<std::size_t>(c)] = s;
    }
    double s = 0.0;
    for (double v : partial) s += v;
    return std::sqrt(s);
}

std::complex<double> inner(const State& a, const State& b) {
    if (a.size() != b.size()) throw std::invalid_argument("inner: dimension mismatch");
    std::complex<double> s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

double fidelity(const State& a, const State& b) {
    const std::complex<double> s = inner(a, b);
    return std::norm(s);
}

}  // namespace polaron
