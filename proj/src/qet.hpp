#pragma once

#include "chebyshev.hpp"
#include "circuit.hpp"
#include "fragments.hpp"
#include "qsp.hpp"
#include "simulate.hpp"

namespace polaron {

// (1,1,0) block-encoding of diag(sin(2y/2^m - 1)) on m+1 qubits: data on
// 0..m-1, ancilla on qubit m. Built from Ry(-1), controlled Ry(2^{j+1-m})
// off data qubit j, and a final X (angles doubled for the half-angle Ry
// convention of gate_matrix).
Circuit sin_block_encoding(int m);

// Real-part LCU circuit on m+3 qubits: data 0..m-1, block-encoding ancilla m,
// LCU ancillas m+1 (conjugate branch) and m+2 (identity-dump branch). The
// <0,00| . |0,00> block equals diag(p_d(sin(2y/2^m - 1)) / 2). A pi shift on
// one interior varphi in both branches normalizes the intrinsic (-1)^{d/2}
// sign of the reflection product.
Circuit qsp_real_circuit(const PhaseFactorSet& phases, const Circuit& be);

struct AmplificationPlan {
    double p_succ = 0.0;
    int m_prime = 0;
};

// p_succ = ((1/2) sqrt(sum_y p^2) / sqrt(M max|p|^2))^2 on the sin-mapped
// grid; m_prime = ceil(pi / (4 asin(sqrt(p_succ))) - 1/2).
AmplificationPlan plan_amplification(const ChebyshevPolynomial& p, int m);

int m_prime_of(double p_succ);

// Full vacuum preparation: Hadamards + qsp_real_circuit as the state
// preparation A, followed by m_prime exact amplitude-amplification rounds
// with Hoyer partial-angle phases computed from the simulated success
// amplitude (so the final success probability is exactly 1 at desk scale).
// The marker subspace is "all three ancillas zero".
struct VacuumPrep {
    Circuit circuit;           // on m+3 qubits
    AmplificationPlan plan;    // formula-based p_succ and m_prime
    double p_initial = 0.0;    // simulated success probability of one A
    PhaseFactorSet phases;
    ChebyshevPolynomial poly;
};

VacuumPrep prepare_vacuum_u0(int m, double W = 6.0, int d = 22);

// Success probability (ancillas all zero) and the post-selected data state.
double success_probability(const State& psi, int m);
State postselect_data(const State& psi, int m);

}  // namespace polaron
