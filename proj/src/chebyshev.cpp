#include "chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace polaron {

double TargetFunction::eval(double z) const {
    if (z < -1.0 || z > 1.0) throw std::invalid_argument("target argument outside [-1, 1]");
    if (kind == Kind::centered) return std::exp(-0.5 * W * W * z * z);
    const double c = (W + alpha) / (2.0 * W);
    return std::exp(-2.0 * W * W * (z - c) * (z - c));
}

double ChebyshevPolynomial::eval(double x) const {
    // Clenshaw recurrence
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 1;) {
        const double b0 = 2.0 * x * b1 - b2 + coeffs[k];
        b2 = b1;
        b1 = b0;
    }
    return x * b1 - b2 + coeffs[0];
}

ChebyshevPolynomial approx_gaussian_poly(double W, int d, double requested_error) {
    if (d < 2 || d % 2 != 0) throw std::invalid_argument("degree must be even and >= 2");
    TargetFunction f{TargetFunction::Kind::centered, W, 0.0};

    // interpolation at the Chebyshev extrema x_j = cos(pi j / d):
    // c_k = (2/d) sum'' f(x_j) cos(pi j k / d)  (halved end terms)
    ChebyshevPolynomial p;
    p.degree = d;
    p.coeffs.assign(static_cast<std::size_t>(d) + 1, 0.0);
    std::vector<double> fx(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) fx[static_cast<std::size_t>(j)] = f.eval(std::cos(M_PI * j / d));
    for (int k = 0; k <= d; ++k) {
        double s = 0.5 * (fx[0] + (k % 2 == 0 ? 1.0 : -1.0) * fx[static_cast<std::size_t>(d)]);
        for (int j = 1; j < d; ++j) s += fx[static_cast<std::size_t>(j)] * std::cos(M_PI * j * k / d);
        double c = 2.0 * s / d;
        if (k == 0 || k == d) c *= 0.5;
        p.coeffs[static_cast<std::size_t>(k)] = c;
    }
    // exact even-parity projection (odd coefficients are already ~1e-17)
    for (int k = 1; k <= d; k += 2) p.coeffs[static_cast<std::size_t>(k)] = 0.0;

    // 0.999 sup-norm safety rescale, then report the achieved error
    double maxabs = 0.0;
    const int grid = 2001;
    for (int i = 0; i < grid; ++i) {
        const double x = -1.0 + 2.0 * i / (grid - 1);
        maxabs = std::max(maxabs, std::abs(p.eval(x)));
    }
    if (maxabs > 0.0) {
        const double scale = 0.999 / maxabs;
        for (double& c : p.coeffs) c *= scale;
    }
    double err = 0.0;
    for (int i = 0; i < grid; ++i) {
        const double x = -1.0 + 2.0 * i / (grid - 1);
        err = std::max(err, std::abs(p.eval(x) - f.eval(x)));
    }
    p.sup_error = err;
    p.error_flag = requested_error > 0.0 && err > requested_error;
    return p;
}

std::string polynomial_to_json(const ChebyshevPolynomial& p) {
    nlohmann::json j;
    j["basis"] = "chebyshev";
    j["parity"] = "even";
    j["coeffs"] = p.coeffs;
    return j.dump();
}

ChebyshevPolynomial polynomial_from_json(const std::string& s) {
    const auto j = nlohmann::json::parse(s);
    if (j.at("basis") != "chebyshev") throw std::invalid_argument("unsupported basis");
    ChebyshevPolynomial p;
    p.coeffs = j.at("coeffs").get<std::vector<double>>();
    p.degree = static_cast<int>(p.coeffs.size()) - 1;
    return p;
}

}  // namespace polaron
