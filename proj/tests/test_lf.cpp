#include <doctest.h>

#include <cmath>

#include "lf.hpp"
#include "model.hpp"

using namespace polaron;

namespace {

double variational_residual(const ModelParams& p, double a) {
    return a - p.g / p.omega0 + (2.0 * p.t * a / p.omega0) * std::exp(-a * a);
}

}  // namespace

TEST_CASE("variational alpha limits") {
    ModelParams p;
    SUBCASE("g = 0 gives alpha = 0") {
        p.g = 0.0;
        CHECK(solve_variational_alpha(p) == 0.0);
    }
    SUBCASE("t = 0 gives alpha = g/omega0 exactly") {
        p.t = 0.0;
        p.g = 1.7;
        p.omega0 = 2.0;
        CHECK(solve_variational_alpha(p) == p.g / p.omega0);
    }
}

TEST_CASE("variational alpha fixed-point residual") {
    ModelParams p;
    for (double lambda : {0.25, 0.5, 1.0, 1.5, 2.0}) {
        p.g = g_of_lambda(p.t, p.omega0, lambda);
        const double a = solve_variational_alpha(p);
        CHECK(std::abs(variational_residual(p, a)) < 1e-10);
    }
    p.g = g_of_lambda(1.0, 1.0, 1.0);
    CHECK(std::abs(solve_variational_alpha(p) - 0.5838) <= 5e-4);
    p.g = g_of_lambda(1.0, 1.0, 2.0);
    CHECK(std::abs(solve_variational_alpha(p) - 1.8958) <= 5e-4);
}

TEST_CASE("variational root minimizes the ansatz energy") {
    ModelParams p;
    p.g = g_of_lambda(1.0, 1.0, 1.2);
    const double a = solve_variational_alpha(p);
    const double e = lf_energy(p, a);
    for (double d : {-0.05, 0.05, -0.3, 0.3}) CHECK(e <= lf_energy(p, a + d) + 1e-12);
}

TEST_CASE("alpha mode resolution") {
    ModelParams p;
    p.g = 1.2;
    p.omega0 = 1.5;
    CHECK(AlphaChoice{AlphaMode::zero}.resolve(p) == 0.0);
    CHECK(AlphaChoice{AlphaMode::strong_coupling}.resolve(p) == p.g / p.omega0);
    CHECK(AlphaChoice{AlphaMode::explicit_value, 0.77}.resolve(p) == 0.77);
    CHECK(AlphaChoice{AlphaMode::variational}.resolve(p) ==
          doctest::Approx(solve_variational_alpha(p)).epsilon(1e-12));
}

TEST_CASE("atomic limit: vacuum overlap is exp(-(g/omega0)^2)") {
    ModelParams p;
    p.t = 0.0;
    p.g = 1.0;
    p.N = 1;
    p.n_max = 40;
    FockBasis basis(p);
    auto gs = ground_state(build_hamiltonian(p, basis));
    auto vac = build_lf_state(p, 0.0, basis);
    const double a = p.g / p.omega0;
    CHECK(std::abs(overlap(gs.state, vac.amplitudes) - std::exp(-a * a)) <= 1e-6);
    // the displaced ansatz at the exact alpha is the exact ground state
    auto lf = build_lf_state(p, a, basis);
    CHECK(std::abs(overlap(gs.state, lf.amplitudes) - 1.0) <= 1e-9);
}

TEST_CASE("two-site squared overlaps at lambda = 1, 2") {
    ModelParams p;
    p.N = 2;
    p.n_max = 40;
    FockBasis basis(p);
    auto run = [&](double lambda, double alpha) {
        p.g = g_of_lambda(p.t, p.omega0, lambda);
        auto gs = ground_state(build_hamiltonian(p, basis));
        auto lf = build_lf_state(p, alpha, basis);
        return overlap(gs.state, lf.amplitudes);
    };
    p.g = g_of_lambda(1.0, 1.0, 1.0);
    CHECK(std::abs(run(1.0, 0.0) - 0.33383) <= 2e-4);
    CHECK(std::abs(run(1.0, solve_variational_alpha(p)) - 0.68734) <= 2e-4);
    p.g = g_of_lambda(1.0, 1.0, 2.0);
    CHECK(std::abs(run(2.0, 0.0) - 0.07681) <= 2e-4);
    CHECK(std::abs(run(2.0, solve_variational_alpha(p)) - 0.79803) <= 2e-4);
}

TEST_CASE("coherent truncation guard") {
    ModelParams p;
    p.N = 1;
    p.n_max = 2;
    FockBasis basis(p);
    CHECK_THROWS_AS(build_lf_state(p, 3.0, basis), NumericalError);
}

TEST_CASE("overlap sweep reports amplitude overlaps in grid order") {
    ModelParams base;
    base.N = 2;
    base.n_max = 12;
    std::vector<double> grid{0.25, 1.0};
    std::vector<AlphaChoice> modes{{AlphaMode::zero}, {AlphaMode::variational}};
    auto rows = overlap_sweep(base, grid, modes);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].lambda == 0.25);
    CHECK(rows[0].mode == AlphaMode::zero);
    CHECK(rows[1].mode == AlphaMode::variational);
    CHECK(rows[2].lambda == 1.0);
    for (const auto& r : rows) {
        CHECK(r.omega_gs > 0.0);
        CHECK(r.omega_gs <= 1.0 + 1e-12);
    }
    // amplitude convention: omega is |<GS|Psi>|, not its square
    ModelParams p = base;
    p.g = g_of_lambda(p.t, p.omega0, 1.0);
    FockBasis basis(p, FockBasis::Kind::total_capped, p.n_max);
    auto gs = ground_state(build_hamiltonian(p, basis));
    auto lf = build_lf_state(p, rows[3].alpha_used, basis);
    CHECK(rows[3].omega_gs ==
          doctest::Approx(std::sqrt(overlap(gs.state, lf.amplitudes))).epsilon(1e-9));
}
