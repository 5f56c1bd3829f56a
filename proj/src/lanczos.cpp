#include "lanczos.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace polaron {

namespace {

// Deterministic chunked reduction: partial sums over fixed 4096-element
// chunks are accumulated in order, so results do not depend on thread count.
double dot_chunked(const std::vector<double>& a, const std::vector<double>& b) {
    const std::int64_t n = static_cast<std::int64_t>(a.size());
    const std::int64_t chunk = 4096;
    const std::int64_t nchunks = (n + chunk - 1) / chunk;
    std::vector<double> partial(static_cast<std::size_t>(nchunks), 0.0);
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < nchunks; ++c) {
        const std::int64_t lo = c * chunk, hi = std::min(n, lo + chunk);
        double s = 0.0;
        for (std::int64_t i = lo; i < hi; ++i) s += a[i] * b[i];
        partial[c] = s;
    }
    double s = 0.0;
    for (double v : partial) s += v;
    return s;
}

void axpy(double alpha, const std::vector<double>& x, std::vector<double>& y) {
    const std::int64_t n = static_cast<std::int64_t>(x.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double norm2(const std::vector<double>& x) { return std::sqrt(dot_chunked(x, x)); }

void scale(std::vector<double>& x, double a) {
    const std::int64_t n = static_cast<std::int64_t>(x.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) x[i] *= a;
}

}  // namespace

// Thick-restart Lanczos (Wu/Simon): each cycle expands the basis to `block`
// vectors with full reorthogonalization, then restarts from the lowest few
// Ritz vectors plus the trailing Lanczos vector. The projected matrix is kept
// dense, so the arrow-shaped restart block needs no special casing.
LanczosResult lanczos_lowest(const std::function<void(const double*, double*)>& matvec,
                             std::int64_t dim, double tol, int block, int max_rounds) {
    LanczosResult out;
    if (dim <= 0) return out;
    block = static_cast<int>(std::min<std::int64_t>(block, dim));
    const int keep = std::min(6, std::max(1, block / 4));  // Ritz vectors kept at restart

    // deterministic start: flat component plus a fixed hash ramp so the
    // vector is never exactly orthogonal to the target eigenvector
    std::vector<double> v(static_cast<std::size_t>(dim));
    for (std::int64_t i = 0; i < dim; ++i) {
        const std::uint64_t h = (static_cast<std::uint64_t>(i) + 1) * 2654435761ull;
        v[static_cast<std::size_t>(i)] = 1.0 + 1e-3 * double(h % 1000) / 1000.0;
    }
    scale(v, 1.0 / norm2(v));

    std::vector<std::vector<double>> V;
    V.push_back(std::move(v));
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(block + 1, block + 1);
    std::vector<double> w(static_cast<std::size_t>(dim));
    double best_residual = 1e300;
    bool truncated_basis = false;  // Krylov space exhausted (b ~ 0)

    for (int round = 0; round < max_rounds; ++round) {
        // expand columns V.size()-1 .. block-1
        while (static_cast<int>(V.size()) <= block && !truncated_basis &&
               static_cast<std::int64_t>(V.size()) <= dim) {
            const int k = static_cast<int>(V.size()) - 1;
            matvec(V[static_cast<std::size_t>(k)].data(), w.data());
            for (int i = 0; i <= k; ++i) {
                const double c = dot_chunked(V[static_cast<std::size_t>(i)], w);
                H(i, k) = H(k, i) = (i < k && H(i, k) != 0.0) ? H(i, k) : c;
                axpy(-c, V[static_cast<std::size_t>(i)], w);
            }
            // second orthogonalization pass for stability (coefficients are
            // O(eps) and do not belong in the projected matrix)
            for (int i = 0; i <= k; ++i) {
                const double c = dot_chunked(V[static_cast<std::size_t>(i)], w);
                if (c != 0.0) axpy(-c, V[static_cast<std::size_t>(i)], w);
            }
            const double b = norm2(w);
            if (b < 1e-13) {
                truncated_basis = true;
                break;
            }
            H(k + 1, k) = H(k, k + 1) = b;
            std::vector<double> next = w;
            scale(next, 1.0 / b);
            V.push_back(std::move(next));
            ++out.iterations;
        }

        const int kr = truncated_basis ? static_cast<int>(V.size())
                                       : static_cast<int>(V.size()) - 1;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H.topLeftCorner(kr, kr));
        const Eigen::VectorXd& theta = es.eigenvalues();
        const Eigen::MatrixXd& S = es.eigenvectors();

        // lowest Ritz pair and its true residual
        std::vector<double> x(static_cast<std::size_t>(dim), 0.0);
        for (int i = 0; i < kr; ++i) axpy(S(i, 0), V[static_cast<std::size_t>(i)], x);
        scale(x, 1.0 / norm2(x));
        matvec(x.data(), w.data());
        axpy(-theta(0), x, w);
        const double res = norm2(w);
        if (res < best_residual) {
            best_residual = res;
            out.eigenvalue = theta(0);
            out.eigenvector = x;
        }
        if (res < tol) {
            out.converged = true;
            out.residual = res;
            return out;
        }
        if (truncated_basis || round + 1 == max_rounds) break;

        // thick restart: lowest `keep` Ritz vectors plus the trailing vector
        const int l = std::min(keep, kr - 1);
        const double beta_last = H(kr, kr - 1);
        std::vector<std::vector<double>> Vnew;
        Vnew.reserve(static_cast<std::size_t>(l) + 1);
        Vnew.push_back(std::move(x));  // column 0 is the best Ritz vector
        for (int j = 1; j < l; ++j) {
            std::vector<double> u(static_cast<std::size_t>(dim), 0.0);
            for (int i = 0; i < kr; ++i) axpy(S(i, j), V[static_cast<std::size_t>(i)], u);
            scale(u, 1.0 / norm2(u));
            Vnew.push_back(std::move(u));
        }
        Vnew.push_back(std::move(V[static_cast<std::size_t>(kr)]));
        V = std::move(Vnew);
        H.setZero();
        for (int j = 0; j < l; ++j) {
            H(j, j) = theta(j);
            H(j, l) = H(l, j) = beta_last * S(kr - 1, j);
        }
    }
    out.residual = best_residual;
    return out;
}

}  // namespace polaron
