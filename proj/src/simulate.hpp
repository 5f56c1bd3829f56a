#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "circuit.hpp"

namespace polaron {

using State = std::vector<std::complex<double>>;

// Default ceiling on dense simulation (N = 4, m = 6 full layout).
inline constexpr int kMaxSimQubits = 26;

State basis_state(int num_qubits, std::uint64_t index = 0);

// Applies gates in order. The parallel kernel is OpenMP over amplitude
// strides; the serial kernel is an independent reference implementation kept
// for testing (see the bench tool). Both check norm preservation to 1e-10
// and reject non-finite amplitudes.
State simulate(const Circuit& c, State init);
State simulate_serial(const Circuit& c, State init);

void apply_gate_parallel(State& psi, const Gate& g);
void apply_gate_serial(State& psi, const Gate& g);

double norm(const State& psi);  // deterministic chunked reduction

std::complex<double> inner(const State& a, const State& b);  // <a|b>

double fidelity(const State& a, const State& b);  // |<a|b>|^2

}  // namespace polaron
