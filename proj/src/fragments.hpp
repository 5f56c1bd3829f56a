#pragma once

#include <vector>

#include "circuit.hpp"
#include "model.hpp"
#include "simulate.hpp"

namespace polaron {

// Position grid x_j = -W + j dx on m qubits, dx = 2W/2^m, dp = pi/W,
// momentum p_k = (k - 2^{m-1}) dp. sigma is the oscillator vacuum width.
struct GridSpec {
    int m = 6;
    double W = 6.0;
    double sigma = 1.0;

    std::int64_t points() const { return std::int64_t(1) << m; }
    double dx() const { return 2.0 * W / double(points()); }
    double dp() const { return M_PI / W; }
    double x(std::int64_t j) const { return -W + double(j) * dx(); }
};

// W = max(6, sqrt(2)|alpha| sigma + 6 sigma) keeps boundary mass below 1e-8.
GridSpec default_grid(int m, double alpha, double sigma = 1.0);

struct RegisterLayout {
    int k_E = 0;  // electron qubits = log2 N
    int N = 1;
    int m = 6;

    int q_total() const { return k_E + N * m; }
    std::vector<int> electron_qubits() const;
    std::vector<int> phonon_register(int site) const;  // m qubits, little-endian
};

RegisterLayout layout_of(const ModelParams& p, const GridSpec& grid);

// QFT on the given qubits (little-endian), matching the +i DFT convention
// F|j> = (1/sqrt(M)) sum_k exp(+2 pi i j k / M) |k>. Exactly m Hadamards,
// m(m-1)/2 controlled phases and final bit-reversal swaps (3 CX each).
Circuit qft_fragment(const std::vector<int>& reg, int num_qubits);
Circuit iqft_fragment(const std::vector<int>& reg, int num_qubits);

// QFT . [Rz phase gradient] . iQFT realizing exp(-i x0 P), x0 = sqrt(2) alpha,
// up to a global phase, on qubits 0..m-1.
Circuit displacement_fragment(const GridSpec& grid, double alpha);

// Adds controls matching the binary of `site` (negative polarity for 0 bits)
// to the Rz/Phase gates only; H/X/Z scaffolding such as the QFT stays
// uncontrolled and cancels when the control is inactive.
Circuit controlled_fragment(const Circuit& inner, const std::vector<int>& electron_register,
                            int site);

// Hadamards on the electron register, u0 replicated on every phonon register,
// then one controlled displacement by -alpha per site. u0 must act on m qubits.
Circuit build_lf_circuit(const ModelParams& p, double alpha, const GridSpec& grid,
                         const Circuit& u0);

// Analytic grid vectors.
State grid_vacuum(const GridSpec& grid);                     // exp(-x^2 / 2 sigma^2), normalized
State grid_coherent(const GridSpec& grid, double alpha);     // centered at -sqrt(2) alpha sigma
State grid_lf_state(const ModelParams& p, double alpha, const GridSpec& grid);

double fidelity_grid_lf(const State& state, const ModelParams& p, double alpha,
                        const GridSpec& grid);

// Ancilla-free exact preparation of a real nonnegative m-qubit vector from
// |0...0> using multiplexed Ry rotations (2^m - 1 gates).
Circuit exact_state_prep(const std::vector<double>& target_amplitudes);

// exact_state_prep specialized to the grid vacuum; usable as the u0 argument
// of build_lf_circuit.
Circuit exact_vacuum_u0(const GridSpec& grid);

}  // namespace polaron
