#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace polaron {

struct LanczosResult {
    double eigenvalue = 0.0;
    std::vector<double> eigenvector;
    double residual = 0.0;
    bool converged = false;
    int iterations = 0;
};

// Lowest eigenpair of a symmetric operator given as y = A x.
// Thick-restart Lanczos with full reorthogonalization of every Krylov vector;
// deterministic start vector, deterministic chunked reductions.
LanczosResult lanczos_lowest(const std::function<void(const double*, double*)>& matvec,
                             std::int64_t dim, double tol, int block = 25,
                             int max_rounds = 60);

}  // namespace polaron
