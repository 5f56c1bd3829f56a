#pragma once

#include <complex>
#include <string>
#include <vector>

#include "chebyshev.hpp"

namespace polaron {

enum class PhaseConvention { symmetric_phi, varphi };

// Symmetric-QSP angles for a degree-d polynomial. The signal operator is
// W(x) = [[x, i sqrt(1-x^2)], [i sqrt(1-x^2), x]] and phases enter as
// exp(i phi Z); the varphi convention shifts the end phases by pi/4 and the
// interior ones by pi/2, turning the interleavers into reflections.
struct PhaseFactorSet {
    int degree = 0;
    PhaseConvention convention = PhaseConvention::symmetric_phi;
    std::vector<double> angles;  // degree+1 entries

    std::vector<double> varphi_angles() const;  // converts if needed
};

// (0,0) entry of exp(i phi0 Z) prod_j [W(x) exp(i phi_j Z)].
std::complex<double> qsp_unitary_entry(const std::vector<double>& phis, double x);

// Reflection-product oracle in the varphi convention:
// exp(i vp0 Z) prod_j [R(x) exp(i vp_j Z)], R(x) = [[x, c], [c, -x]].
std::complex<double> reflection_product_entry(const std::vector<double>& varphis, double x);

// Damped Newton on the symmetric parameters; the result is always verified
// through qsp_unitary_entry on a 501-point grid before being returned.
// Throws NumericalError with the best residual on non-convergence.
PhaseFactorSet solve_phase_factors(const ChebyshevPolynomial& p, double tol = 1e-8);

// The -Phi set: varphi_j + pi for j < d, varphi_d unchanged. Reconstructs the
// complex conjugate polynomial; applying it twice is the identity mod 2pi.
PhaseFactorSet conjugate_phases(const PhaseFactorSet& s);

double reconstruction_error(const PhaseFactorSet& s, const ChebyshevPolynomial& p,
                            int grid_points = 501);

std::string phases_to_json(const PhaseFactorSet& s);
PhaseFactorSet phases_from_json(const std::string& text);

}  // namespace polaron
