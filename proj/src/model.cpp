#include "model.hpp"

#include <cmath>
#include <cstdint>
#include <functional>

#include "lanczos.hpp"

namespace polaron {

namespace {

bool is_power_of_two(int n) { return n >= 1 && (n & (n - 1)) == 0; }

}  // namespace

void ModelParams::validate() const {
    if (t < 0) throw std::invalid_argument("t must be >= 0");
    if (omega0 <= 0) throw std::invalid_argument("omega0 must be > 0");
    if (g < 0) throw std::invalid_argument("g must be >= 0");
    if (!is_power_of_two(N)) throw std::invalid_argument("N must be a power of two");
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
}

double lambda_of(const ModelParams& p) {
    if (p.t == 0.0)
        throw std::invalid_argument(
            "lambda diverges at t = 0; request the strong-coupling branch explicitly");
    return p.g * p.g / (2.0 * p.t * p.omega0);
}

double g_of_lambda(double t, double omega0, double lambda) {
    if (t <= 0) throw std::invalid_argument("t must be > 0 to solve for g");
    return std::sqrt(2.0 * t * omega0 * lambda);
}

int default_n_max(double g, double omega0) {
    const double a = g / omega0;
    const int h = static_cast<int>(std::ceil(a * a + 5.0 * a));
    return std::max(10, h);
}

std::uint64_t FockBasis::pack(const std::vector<int>& occ) {
    // <= 16 sites with nu < 16 fit in 64 bits; enough for every desk-scale run.
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < occ.size(); ++i) key |= std::uint64_t(occ[i] & 0xf) << (4 * i);
    return key;
}

FockBasis::FockBasis(const ModelParams& p, Kind kind, int total_cap, std::int64_t dimension_cap)
    : kind_(kind), N_(p.N), n_max_(p.n_max), cap_(total_cap) {
    p.validate();
    if (kind_ == Kind::cartesian) {
        cap_ = -1;
        long double d = 1;
        for (int i = 0; i < N_; ++i) d *= (n_max_ + 1);
        d *= N_;
        if (d > static_cast<long double>(dimension_cap))
            throw std::invalid_argument("cartesian basis dimension exceeds the configured cap");
        block_ = 1;
        for (int i = 0; i < N_; ++i) block_ *= (n_max_ + 1);
        dim_ = block_ * N_;
        return;
    }
    if (cap_ < 0) cap_ = n_max_;
    if (n_max_ > 15) throw std::invalid_argument("total_capped basis supports n_max <= 15");
    // enumerate occupation vectors with per-site cutoff and total cap
    std::vector<int> occ(N_, 0);
    std::int64_t count = 0;
    const std::int64_t guard = dimension_cap;
    std::function<void(int, int)> rec = [&](int site, int budget) {
        if (site == N_) {
            occs_.push_back(occ);
            occ_index_.emplace(pack(occ), count++);
            return;
        }
        for (int v = 0; v <= std::min(n_max_, budget); ++v) {
            occ[site] = v;
            rec(site + 1, budget - v);
        }
        occ[site] = 0;
    };
    rec(0, cap_);
    block_ = count;
    dim_ = block_ * N_;
    if (dim_ > guard) throw std::invalid_argument("capped basis dimension exceeds the configured cap");
}

std::int64_t FockBasis::flat_index(const FockBasisIndex& s) const {
    if (s.electron_site < 0 || s.electron_site >= N_) throw std::out_of_range("electron site");
    if (static_cast<int>(s.occupations.size()) != N_) throw std::invalid_argument("occupation length");
    if (kind_ == Kind::cartesian) {
        std::int64_t idx = 0, w = 1;
        for (int i = 0; i < N_; ++i) {
            if (s.occupations[i] < 0 || s.occupations[i] > n_max_) throw std::out_of_range("occupation");
            idx += w * s.occupations[i];
            w *= (n_max_ + 1);
        }
        return std::int64_t(s.electron_site) * block_ + idx;
    }
    auto it = occ_index_.find(pack(s.occupations));
    if (it == occ_index_.end()) throw std::out_of_range("occupation outside capped basis");
    return std::int64_t(s.electron_site) * block_ + it->second;
}

FockBasisIndex FockBasis::state_of(std::int64_t flat) const {
    if (flat < 0 || flat >= dim_) throw std::out_of_range("flat index");
    FockBasisIndex s;
    s.electron_site = static_cast<int>(flat / block_);
    std::int64_t r = flat % block_;
    if (kind_ == Kind::cartesian) {
        s.occupations.resize(N_);
        for (int i = 0; i < N_; ++i) {
            s.occupations[i] = static_cast<int>(r % (n_max_ + 1));
            r /= (n_max_ + 1);
        }
    } else {
        s.occupations = occs_[static_cast<std::size_t>(r)];
    }
    return s;
}

SparseHamiltonian build_hamiltonian(const ModelParams& p, const FockBasis& basis) {
    p.validate();
    const std::int64_t dim = basis.dimension();
    const int N = p.N;
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(static_cast<std::size_t>(dim) * (2 * N == 2 ? 4 : 5));

    FockBasisIndex s;
    for (std::int64_t col = 0; col < dim; ++col) {
        s = basis.state_of(col);
        const int e = s.electron_site;
        // phonon energy
        int total = 0;
        for (int v : s.occupations) total += v;
        if (total > 0) trips.emplace_back(col, col, p.omega0 * total);
        // hopping, wrapping only for periodic chains
        if (N > 1 && p.t != 0.0) {
            for (int d : {+1, -1}) {
                int e2 = e + d;
                if (p.boundary == Boundary::periodic) {
                    e2 = (e2 + N) % N;
                } else if (e2 < 0 || e2 >= N) {
                    continue;
                }
                FockBasisIndex s2 = s;
                s2.electron_site = e2;
                trips.emplace_back(basis.flat_index(s2), col, -p.t);
            }
        }
        // local coupling g sqrt(nu+1) at the electron site
        if (p.g != 0.0) {
            const int v = s.occupations[e];
            if (v < p.n_max) {
                FockBasisIndex s2 = s;
                s2.occupations[e] = v + 1;
                bool ok = true;
                std::int64_t row = -1;
                if (basis.kind() == FockBasis::Kind::total_capped) {
                    if (total + 1 > basis.total_cap()) ok = false;
                }
                if (ok) {
                    row = basis.flat_index(s2);
                    trips.emplace_back(row, col, p.g * std::sqrt(double(v + 1)));
                }
            }
            if (v > 0) {
                FockBasisIndex s2 = s;
                s2.occupations[e] = v - 1;
                trips.emplace_back(basis.flat_index(s2), col, p.g * std::sqrt(double(v)));
            }
        }
    }

    SparseHamiltonian H;
    H.dimension = dim;
    H.matrix.resize(dim, dim);
    H.matrix.setFromTriplets(trips.begin(), trips.end());  // sums duplicates
    H.matrix.makeCompressed();
    return H;
}

SparseHamiltonian build_hamiltonian(const ModelParams& p) {
    FockBasis basis(p, FockBasis::Kind::cartesian);
    return build_hamiltonian(p, basis);
}

GroundState ground_state(const SparseHamiltonian& H, double tol) {
    if (tol <= 0) throw std::invalid_argument("tol must be > 0");
    auto matvec = [&H](const double* x, double* y) {
        const auto& M = H.matrix;
        const std::int64_t n = M.rows();
#pragma omp parallel for schedule(static)
        for (std::int64_t r = 0; r < n; ++r) {
            double acc = 0.0;
            for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(M, r); it; ++it)
                acc += it.value() * x[it.col()];
            y[r] = acc;
        }
    };
    LanczosResult res = lanczos_lowest(matvec, H.dimension, tol);
    if (!res.converged)
        throw NumericalError("Lanczos failed to converge; best residual " +
                             std::to_string(res.residual));
    return GroundState{res.eigenvalue, std::move(res.eigenvector)};
}

}  // namespace polaron
