#pragma once

#include <string>
#include <vector>

namespace polaron {

// Target functions on z in [-1, 1] (centered is even-extended):
//   centered: h0(z) = exp(-W^2 z^2 / 2)
//   shifted:  ha(z) = exp(-2 W^2 (z - (W + alpha)/(2W))^2)
struct TargetFunction {
    enum class Kind { centered, shifted };
    Kind kind = Kind::centered;
    double W = 6.0;
    double alpha = 0.0;

    double eval(double z) const;
};

struct ChebyshevPolynomial {
    int degree = 0;
    std::vector<double> coeffs;  // Chebyshev basis, degree+1 entries
    // filled by approx_gaussian_poly:
    double sup_error = 0.0;       // sup |p - h0| on a 2001-point grid
    bool error_flag = false;      // requested tolerance not reachable at this degree

    double eval(double x) const;  // Clenshaw
};

// Even-parity Chebyshev interpolant of h0 at the degree-d Chebyshev extrema,
// rescaled to sup norm 0.999. If requested_error > 0 and the achieved error
// exceeds it, the error_flag is set (polynomial still returned).
ChebyshevPolynomial approx_gaussian_poly(double W, int d, double requested_error = 0.0);

std::string polynomial_to_json(const ChebyshevPolynomial& p);
ChebyshevPolynomial polynomial_from_json(const std::string& s);

}  // namespace polaron
