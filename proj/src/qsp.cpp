#include "qsp.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "model.hpp"  // NumericalError

namespace polaron {

namespace {

using C2 = Eigen::Matrix2cd;
const std::complex<double> I(0.0, 1.0);

C2 signal(double x) {
    const double c = std::sqrt(std::max(0.0, 1.0 - x * x));
    C2 w;
    w << x, I * c, I * c, x;
    return w;
}

C2 reflection(double x) {
    const double c = std::sqrt(std::max(0.0, 1.0 - x * x));
    C2 r;
    r << x, c, c, -x;
    return r;
}

C2 ephz(double p) {
    C2 z = C2::Zero();
    z(0, 0) = std::polar(1.0, p);
    z(1, 1) = std::polar(1.0, -p);
    return z;
}

// expand symmetric half-parameters to the full phi list
std::vector<double> expand_symmetric(const std::vector<double>& half, int d) {
    std::vector<double> phis(static_cast<std::size_t>(d) + 1);
    const int k = static_cast<int>(half.size());
    for (int j = 0; j <= d; ++j)
        phis[static_cast<std::size_t>(j)] = half[static_cast<std::size_t>(std::min(j, d - j))];
    (void)k;
    return phis;
}

}  // namespace

std::complex<double> qsp_unitary_entry(const std::vector<double>& phis, double x) {
    C2 u = ephz(phis[0]);
    for (std::size_t j = 1; j < phis.size(); ++j) u = u * signal(x) * ephz(phis[j]);
    return u(0, 0);
}

std::complex<double> reflection_product_entry(const std::vector<double>& varphis, double x) {
    C2 u = ephz(varphis[0]);
    for (std::size_t j = 1; j < varphis.size(); ++j) u = u * reflection(x) * ephz(varphis[j]);
    return u(0, 0);
}

std::vector<double> PhaseFactorSet::varphi_angles() const {
    if (convention == PhaseConvention::varphi) return angles;
    std::vector<double> vp = angles;
    const std::size_t d = vp.size() - 1;
    vp[0] += M_PI / 4.0;
    vp[d] += M_PI / 4.0;
    for (std::size_t j = 1; j < d; ++j) vp[j] += M_PI / 2.0;
    return vp;
}

PhaseFactorSet solve_phase_factors(const ChebyshevPolynomial& p, double tol) {
    const int d = p.degree;
    if (d < 1) throw std::invalid_argument("degree must be >= 1");
    double sup = 0.0;
    for (int i = 0; i < 801; ++i) sup = std::max(sup, std::abs(p.eval(-1.0 + 2.0 * i / 800.0)));
    if (sup > 1.0 + 1e-12) throw std::invalid_argument("polynomial sup norm must be <= 1");

    const int k = d / 2 + 1;  // independent symmetric parameters
    std::vector<double> xs(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        xs[static_cast<std::size_t>(i)] = std::cos(M_PI * (i + 0.5) / (2.0 * k));

    auto residual = [&](const std::vector<double>& half, Eigen::VectorXd& r) {
        const std::vector<double> phis = expand_symmetric(half, d);
        for (int i = 0; i < k; ++i)
            r(i) = qsp_unitary_entry(phis, xs[static_cast<std::size_t>(i)]).real() -
                   p.eval(xs[static_cast<std::size_t>(i)]);
    };

    std::vector<double> half(static_cast<std::size_t>(k), 0.0);
    half[0] = M_PI / 4.0;
    Eigen::VectorXd r(k), rtrial(k);
    residual(half, r);
    double best = r.cwiseAbs().maxCoeff();
    const double newton_tol = std::min(tol, 1e-12);

    for (int iter = 0; iter < 300 && best > newton_tol; ++iter) {
        Eigen::MatrixXd J(k, k);
        const double eps = 1e-7;
        std::vector<double> hp = half;
        for (int j = 0; j < k; ++j) {
            Eigen::VectorXd rp(k), rm(k);
            hp[static_cast<std::size_t>(j)] = half[static_cast<std::size_t>(j)] + eps;
            residual(hp, rp);
            hp[static_cast<std::size_t>(j)] = half[static_cast<std::size_t>(j)] - eps;
            residual(hp, rm);
            hp[static_cast<std::size_t>(j)] = half[static_cast<std::size_t>(j)];
            J.col(j) = (rp - rm) / (2.0 * eps);
        }
        const Eigen::VectorXd step = J.fullPivLu().solve(r);
        double damp = 1.0;
        bool improved = false;
        for (int h = 0; h < 40; ++h) {
            std::vector<double> trial = half;
            for (int j = 0; j < k; ++j) trial[static_cast<std::size_t>(j)] -= damp * step(j);
            residual(trial, rtrial);
            const double rn = rtrial.cwiseAbs().maxCoeff();
            if (rn < best) {
                half = std::move(trial);
                r = rtrial;
                best = rn;
                improved = true;
                break;
            }
            damp *= 0.5;
        }
        if (!improved) break;
    }

    PhaseFactorSet s;
    s.degree = d;
    s.convention = PhaseConvention::symmetric_phi;
    s.angles = expand_symmetric(half, d);
    const double err = reconstruction_error(s, p);
    if (err > tol)
        throw NumericalError("phase solver did not converge; best reconstruction error " +
                             std::to_string(err));
    return s;
}

PhaseFactorSet conjugate_phases(const PhaseFactorSet& s) {
    PhaseFactorSet out;
    out.degree = s.degree;
    out.convention = PhaseConvention::varphi;
    out.angles = s.varphi_angles();
    for (std::size_t j = 0; j + 1 < out.angles.size(); ++j) out.angles[j] += M_PI;
    return out;
}

double reconstruction_error(const PhaseFactorSet& s, const ChebyshevPolynomial& p,
                            int grid_points) {
    double err = 0.0;
    const double sign = (s.degree / 2) % 2 == 0 ? 1.0 : -1.0;
    for (int i = 0; i < grid_points; ++i) {
        const double x = -1.0 + 2.0 * i / (grid_points - 1);
        double re;
        if (s.convention == PhaseConvention::symmetric_phi) {
            re = qsp_unitary_entry(s.angles, x).real();
        } else {
            re = sign * reflection_product_entry(s.angles, x).real();
        }
        err = std::max(err, std::abs(re - p.eval(x)));
    }
    return err;
}

std::string phases_to_json(const PhaseFactorSet& s) {
    nlohmann::json j;
    j["degree"] = s.degree;
    j["convention"] = s.convention == PhaseConvention::symmetric_phi ? "symmetric-phi" : "varphi";
    j["angles"] = s.angles;
    return j.dump();
}

PhaseFactorSet phases_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    PhaseFactorSet s;
    s.degree = j.at("degree").get<int>();
    const std::string conv = j.at("convention").get<std::string>();
    if (conv == "symmetric-phi") s.convention = PhaseConvention::symmetric_phi;
    else if (conv == "varphi") s.convention = PhaseConvention::varphi;
    else throw std::invalid_argument("unknown phase convention: " + conv);
    s.angles = j.at("angles").get<std::vector<double>>();
    if (static_cast<int>(s.angles.size()) != s.degree + 1)
        throw std::invalid_argument("angle count does not match degree");
    return s;
}

}  // namespace polaron
