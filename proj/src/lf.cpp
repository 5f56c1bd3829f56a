#include "lf.hpp"

#include <algorithm>
#include <cmath>

namespace polaron {

double AlphaChoice::resolve(const ModelParams& p) const {
    switch (mode) {
        case AlphaMode::zero: return 0.0;
        case AlphaMode::strong_coupling: return p.g / p.omega0;
        case AlphaMode::variational: return solve_variational_alpha(p);
        case AlphaMode::explicit_value: return value;
    }
    return 0.0;
}

double lf_energy(const ModelParams& p, double alpha) {
    return -2.0 * p.t * std::exp(-alpha * alpha) + p.omega0 * alpha * alpha - 2.0 * p.g * alpha;
}

namespace {

double fixed_point_residual(const ModelParams& p, double a) {
    return a - p.g / p.omega0 + (2.0 * p.t * a / p.omega0) * std::exp(-a * a);
}

}  // namespace

double solve_variational_alpha(const ModelParams& p, double tol, int max_iter) {
    if (p.omega0 <= 0) throw std::invalid_argument("omega0 must be > 0");
    if (tol <= 0) throw std::invalid_argument("tol must be > 0");
    if (p.g == 0.0) return 0.0;
    if (p.t == 0.0) return p.g / p.omega0;

    // All fixed points live in [0, g/omega0]: scan for sign changes, bisect
    // each bracket, then keep the energy-minimizing root.
    const double hi = p.g / p.omega0;
    const int scan = 2000;
    double best_alpha = -1.0, best_energy = 1e300;
    double prev_x = 0.0, prev_f = fixed_point_residual(p, 0.0);
    for (int i = 1; i <= scan; ++i) {
        const double x = hi * double(i) / double(scan);
        const double f = fixed_point_residual(p, x);
        if (prev_f == 0.0 || prev_f * f <= 0.0) {
            double lo = prev_x, up = x;
            double flo = prev_f;
            for (int it = 0; it < max_iter; ++it) {
                const double mid = 0.5 * (lo + up);
                const double fm = fixed_point_residual(p, mid);
                if (flo * fm <= 0.0) {
                    up = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
                if (up - lo < tol * 1e-3) break;
            }
            const double root = 0.5 * (lo + up);
            const double e = lf_energy(p, root);
            if (e < best_energy) {
                best_energy = e;
                best_alpha = root;
            }
        }
        prev_x = x;
        prev_f = f;
    }
    if (best_alpha < 0.0)
        throw NumericalError("no fixed point found on [0, g/omega0]");
    if (std::abs(fixed_point_residual(p, best_alpha)) > tol)
        throw NumericalError("variational fixed point residual above tolerance");
    return best_alpha;
}

AnsatzState build_lf_state(const ModelParams& p, double alpha, const FockBasis& basis) {
    p.validate();
    // coherent amplitudes e^{-a^2/2} (-a)^nu / sqrt(nu!)
    std::vector<double> coh(static_cast<std::size_t>(p.n_max) + 1);
    coh[0] = std::exp(-alpha * alpha / 2.0);
    for (int v = 1; v <= p.n_max; ++v)
        coh[static_cast<std::size_t>(v)] = coh[static_cast<std::size_t>(v - 1)] * (-alpha) / std::sqrt(double(v));
    double norm2 = 0.0;
    for (double c : coh) norm2 += c * c;
    if (norm2 < 0.999)
        throw NumericalError("n_max too small: truncated coherent norm^2 < 0.999");

    AnsatzState st;
    st.alpha = alpha;
    st.amplitudes.assign(static_cast<std::size_t>(basis.dimension()), 0.0);
    const double pref = 1.0 / std::sqrt(double(p.N));
    FockBasisIndex s;
    s.occupations.assign(static_cast<std::size_t>(p.N), 0);
    double total = 0.0;
    const int vmax = (basis.kind() == FockBasis::Kind::total_capped)
                         ? std::min(p.n_max, basis.total_cap())
                         : p.n_max;
    for (int e = 0; e < p.N; ++e) {
        s.electron_site = e;
        for (int v = 0; v <= vmax; ++v) {
            s.occupations[static_cast<std::size_t>(e)] = v;
            const double amp = pref * coh[static_cast<std::size_t>(v)];
            st.amplitudes[static_cast<std::size_t>(basis.flat_index(s))] = amp;
            total += amp * amp;
        }
        s.occupations[static_cast<std::size_t>(e)] = 0;
    }
    if (total < 0.999)
        throw NumericalError("basis cap too small: truncated coherent norm^2 < 0.999");
    const double inv = 1.0 / std::sqrt(total);
    for (double& a : st.amplitudes) a *= inv;
    return st;
}

double overlap(const std::vector<double>& a, const std::vector<double>& b) {
    const double amp = overlap_amplitude(a, b);
    return amp * amp;
}

double overlap_amplitude(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("overlap: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return std::abs(s);
}

std::vector<OverlapResult> overlap_sweep(const ModelParams& base,
                                         const std::vector<double>& lambda_grid,
                                         const std::vector<AlphaChoice>& modes,
                                         double lanczos_tol) {
    if (base.t <= 0) throw std::invalid_argument("overlap_sweep requires t > 0");
    std::vector<OverlapResult> out;
    for (double lam : lambda_grid) {
        ModelParams p = base;
        p.g = g_of_lambda(base.t, base.omega0, lam);
        FockBasis basis(p, FockBasis::Kind::total_capped, p.n_max);
        SparseHamiltonian H = build_hamiltonian(p, basis);
        GroundState gs;
        try {
            gs = ground_state(H, lanczos_tol);
        } catch (const NumericalError& e) {
            throw NumericalError("eigensolver failure at lambda = " + std::to_string(lam) +
                                 ": " + e.what());
        }
        for (const AlphaChoice& c : modes) {
            OverlapResult r;
            r.lambda = lam;
            r.mode = c.mode;
            r.alpha_used = c.resolve(p);
            AnsatzState lf = build_lf_state(p, r.alpha_used, basis);
            r.omega_gs = overlap_amplitude(gs.state, lf.amplitudes);
            r.ground_energy = gs.energy;
            r.params = p;
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace polaron
