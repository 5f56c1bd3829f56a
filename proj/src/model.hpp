#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Sparse>

namespace polaron {

// Thrown when an eigensolve or other numerical routine fails to converge.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Boundary { periodic, open };

struct ModelParams {
    double t = 1.0;       // hopping amplitude
    double omega0 = 1.0;  // phonon frequency (hbar = 1)
    double g = 0.0;       // electron-phonon coupling
    int N = 1;            // site count, power of two
    int n_max = 10;       // per-site phonon cutoff
    Boundary boundary = Boundary::periodic;

    void validate() const;
};

// Effective coupling lambda = g^2 / (2 t omega0). Throws for t == 0.
double lambda_of(const ModelParams& p);

// Coupling strength for a requested lambda: g = sqrt(2 t omega0 lambda).
double g_of_lambda(double t, double omega0, double lambda);

// Default cutoff heuristic covering the coherent-state tail.
int default_n_max(double g, double omega0);

struct FockBasisIndex {
    int electron_site = 0;
    std::vector<int> occupations;
};

// Basis over (electron site) x (phonon occupations). Two layouts:
//  - cartesian: all occupation vectors with nu_i <= n_max; flat index is
//    electron-major with occupations little-endian by site.
//  - total_capped: occupation vectors additionally constrained to
//    sum(nu) <= total_cap, enumerated in lexicographic order. Needed to make
//    N = 8, n_max = 12 tractable (the cartesian space has ~6.5e9 states).
class FockBasis {
  public:
    enum class Kind { cartesian, total_capped };

    FockBasis(const ModelParams& p, Kind kind = Kind::cartesian,
              int total_cap = -1, std::int64_t dimension_cap = 32000000);

    std::int64_t dimension() const { return dim_; }
    Kind kind() const { return kind_; }
    int sites() const { return N_; }
    int n_max() const { return n_max_; }
    int total_cap() const { return cap_; }

    std::int64_t flat_index(const FockBasisIndex& s) const;
    FockBasisIndex state_of(std::int64_t flat) const;

    // Number of occupation vectors (phonon part only).
    std::int64_t phonon_block_size() const { return block_; }

  private:
    Kind kind_;
    int N_, n_max_, cap_;
    std::int64_t dim_ = 0, block_ = 0;
    // total_capped bookkeeping
    std::vector<std::vector<int>> occs_;
    std::unordered_map<std::uint64_t, std::int64_t> occ_index_;

    static std::uint64_t pack(const std::vector<int>& occ);
};

struct SparseHamiltonian {
    std::int64_t dimension = 0;
    Eigen::SparseMatrix<double, Eigen::RowMajor> matrix;
};

SparseHamiltonian build_hamiltonian(const ModelParams& p, const FockBasis& basis);

// Convenience overload using the cartesian basis.
SparseHamiltonian build_hamiltonian(const ModelParams& p);

// Lowest eigenpair via restarted Lanczos with full reorthogonalization.
// Postcondition: ||H x - E x|| < tol. Throws NumericalError on
// non-convergence, carrying the best residual reached.
struct GroundState {
    double energy = 0.0;
    std::vector<double> state;  // unit norm
};

GroundState ground_state(const SparseHamiltonian& H, double tol = 1e-10);

}  // namespace polaron
