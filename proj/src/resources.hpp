#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "circuit.hpp"
#include "lf.hpp"
#include "model.hpp"

namespace polaron {

enum class McxScheme { linear_clean, linear_dirty };

struct DecompositionPolicy {
    std::string id = "default";
    int t_per_rz = 30;       // fixed T budget per arbitrary-angle rotation
    int toffoli_as_t = 0;    // 0 keeps Toffoli as its own category
    McxScheme mcx_scheme = McxScheme::linear_clean;

    // Toffoli count of a k-controlled NOT: 0 for k <= 1, 1 for k = 2, else 2k-3.
    std::int64_t mcx_toffoli(int k) const;
};

std::string policy_to_json(const DecompositionPolicy& p);
DecompositionPolicy policy_from_json(const std::string& text);

struct GateTally {
    std::int64_t clifford_1q = 0;
    std::int64_t clifford_2q = 0;
    std::int64_t rz = 0;
    std::int64_t ry = 0;
    std::int64_t toffoli = 0;
    std::map<int, std::int64_t> mcx_by_k;

    std::int64_t t_count(const DecompositionPolicy& policy) const;
    GateTally& operator+=(const GateTally& other);
};

// Classifies every gate into exactly one category. Controlled rotations with
// k controls expand via the AXBXC identity into 2 k-controlled NOTs plus 3
// uncontrolled rotations before tallying.
GateTally tally(const Circuit& c, const DecompositionPolicy& policy);

// Raw pre-decomposition census keyed by "KIND/k" (k = control count), e.g.
// "PHASE/1" for the QFT's controlled phases.
std::map<std::string, std::int64_t> census(const Circuit& c);

// T-counts of the two preparation circuits at site count N, grid size m and
// QET degree d: N QET vacuum preparations, plus (LF only) N controlled
// displacements with k_E = log2 N controls. T-counts are angle-agnostic.
std::int64_t tcount_vacuum(int N, int m, int d, const DecompositionPolicy& policy);
std::int64_t tcount_lf(int N, int m, int d, const DecompositionPolicy& policy);

struct CostRatioPoint {
    double lambda = 0.0;
    double alpha = 0.0;
    double omega_lf = 0.0;   // amplitude overlap, variational alpha
    double omega_vac = 0.0;  // amplitude overlap, alpha = 0
    std::int64_t t_lf = 0;
    std::int64_t t_vac = 0;
    double ratio = 0.0;      // (omega_lf^-1 t_lf) / (omega_vac^-1 t_vac)
};

std::vector<CostRatioPoint> cost_ratio_sweep(const ModelParams& base,
                                             const std::vector<double>& lambda_grid, int m,
                                             const DecompositionPolicy& policy, int d = 22);

}  // namespace polaron
