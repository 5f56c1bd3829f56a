#pragma once

#include <vector>

#include "model.hpp"

namespace polaron {

enum class AlphaMode { zero, strong_coupling, variational, explicit_value };

struct AlphaChoice {
    AlphaMode mode = AlphaMode::variational;
    double value = 0.0;  // used only for explicit_value

    double resolve(const ModelParams& p) const;
};

// Root of alpha = g/omega0 - (2 t alpha / omega0) exp(-alpha^2), picking the
// energy-minimizing root of E(alpha) = -2t exp(-alpha^2) + omega0 alpha^2 - 2 g alpha
// when several fixed points exist.
double solve_variational_alpha(const ModelParams& p, double tol = 1e-12, int max_iter = 200);

double lf_energy(const ModelParams& p, double alpha);

struct AnsatzState {
    double alpha = 0.0;
    std::vector<double> amplitudes;  // over the given FockBasis, unit norm
};

// (1/sqrt(N)) sum_i |i>_E |-alpha>_{B_i} |vac> elsewhere, truncated at n_max
// and renormalized. Throws when the truncated coherent norm^2 < 0.999.
AnsatzState build_lf_state(const ModelParams& p, double alpha, const FockBasis& basis);

// Squared overlap |<a|b>|^2.
double overlap(const std::vector<double>& a, const std::vector<double>& b);

// Amplitude overlap |<a|b>|. This is the quantity reported as Omega_gs by the
// sweeps and the cost-ratio pipeline (see docs/conventions.md).
double overlap_amplitude(const std::vector<double>& a, const std::vector<double>& b);

struct OverlapResult {
    double lambda = 0.0;
    AlphaMode mode = AlphaMode::zero;
    double alpha_used = 0.0;
    double omega_gs = 0.0;  // amplitude overlap |<GS|Psi_LF>|
    double ground_energy = 0.0;
    ModelParams params;
};

// One result per (lambda, mode) in grid order. g = sqrt(2 t omega0 lambda).
// Uses the total_capped basis with cap = n_max so that N = 8, n_max = 12 runs
// at desk scale; for small cartesian-feasible systems the two bases agree.
std::vector<OverlapResult> overlap_sweep(const ModelParams& base,
                                         const std::vector<double>& lambda_grid,
                                         const std::vector<AlphaChoice>& modes,
                                         double lanczos_tol = 1e-10);

}  // namespace polaron
