#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "fragments.hpp"
#include "simulate.hpp"

using namespace polaron;

namespace {

using cd = std::complex<double>;

State dft_plus(const State& in) {
    const std::size_t M = in.size();
    State out(M, cd(0.0));
    for (std::size_t k = 0; k < M; ++k)
        for (std::size_t j = 0; j < M; ++j)
            out[k] += in[j] * std::exp(cd(0.0, 2.0 * M_PI * double(j) * double(k) / double(M)));
    for (auto& a : out) a /= std::sqrt(double(M));
    return out;
}

}  // namespace

TEST_CASE("qft matches the +i DFT") {
    const int m = 4;
    std::vector<int> reg{0, 1, 2, 3};
    Circuit qft = qft_fragment(reg, m);
    for (std::uint64_t j : {std::uint64_t(0), std::uint64_t(1), std::uint64_t(5),
                            std::uint64_t(11), std::uint64_t(15)}) {
        State got = simulate(qft, basis_state(m, j));
        State want = dft_plus(basis_state(m, j));
        // phases must match too, not just moduli
        double diff = 0.0;
        for (std::size_t i = 0; i < got.size(); ++i)
            diff = std::max(diff, std::abs(got[i] - want[i]));
        CHECK(diff < 1e-12);
    }
    Circuit round = qft;
    round.append(iqft_fragment(reg, m));
    CHECK(std::abs(fidelity(simulate(round, basis_state(m, 7)), basis_state(m, 7)) - 1.0) <=
          1e-12);
}

TEST_CASE("qft works on an offset register") {
    const int m = 3;
    std::vector<int> reg{2, 3, 4};
    Circuit qft = qft_fragment(reg, 6);
    State in = basis_state(6, std::uint64_t(3) << 2);  // |j=3> on the register
    State got = simulate(qft, in);
    State want_small = dft_plus(basis_state(m, 3));
    // embed: qubits 0,1,5 stay |0>
    double diff = 0.0;
    for (std::uint64_t k = 0; k < 8; ++k)
        diff = std::max(diff, std::abs(got[k << 2] - want_small[k]));
    CHECK(diff < 1e-12);
}

TEST_CASE("integer grid shifts permute the register cyclically") {
    // alpha chosen so x0 = sqrt(2) alpha sigma is an exact number of grid steps
    const int m = 5;
    GridSpec grid;
    grid.m = m;
    grid.W = 6.0;
    for (int steps : {1, 3, 8}) {
        const double alpha = steps * grid.dx() / std::sqrt(2.0);
        Circuit disp = displacement_fragment(grid, alpha);
        for (std::uint64_t j : {std::uint64_t(0), std::uint64_t(9), std::uint64_t(30)}) {
            State out = simulate(disp, basis_state(m, j));
            // translation by +x0: j -> j + steps (mod 2^m)
            const std::uint64_t j2 = (j + std::uint64_t(steps)) % 32;
            CHECK(std::abs(fidelity(out, basis_state(m, j2)) - 1.0) <= 1e-10);
        }
    }
}

TEST_CASE("displacement maps the grid vacuum to the coherent state") {
    for (double alpha : {0.5, 1.0, 1.8}) {
        GridSpec grid = default_grid(6, alpha);
        Circuit c = exact_vacuum_u0(grid);
        c.append(displacement_fragment(grid, -alpha));
        State out = simulate(c, basis_state(grid.m));
        State want = grid_coherent(grid, alpha);  // |-alpha> profile at -sqrt(2) alpha sigma
        CHECK(fidelity(out, want) > 0.9999);
    }
}

TEST_CASE("exact state prep hits arbitrary real profiles") {
    GridSpec grid = default_grid(4, 0.0);
    State vac = grid_vacuum(grid);
    std::vector<double> target(vac.size());
    for (std::size_t i = 0; i < vac.size(); ++i) target[i] = vac[i].real();
    Circuit prep = exact_state_prep(target);
    CHECK(int(prep.gates.size()) <= (1 << grid.m) - 1);
    State out = simulate(prep, basis_state(grid.m));
    CHECK(std::abs(fidelity(out, vac) - 1.0) <= 1e-12);
}

TEST_CASE("inactive electron controls leave phonons untouched") {
    ModelParams p;
    p.N = 4;
    GridSpec grid = default_grid(3, 1.0);
    RegisterLayout lay = layout_of(p, grid);
    Circuit inner = displacement_fragment(grid, 1.0);
    Circuit embedded = remap(inner, lay.phonon_register(2), lay.q_total());
    Circuit ctrl = controlled_fragment(embedded, lay.electron_qubits(), 2);
    // electron register in |01> = site 1 (not 2): whole thing must be identity
    State init = basis_state(lay.q_total(), 1);
    State out = simulate(ctrl, init);
    CHECK(std::abs(fidelity(out, init) - 1.0) <= 1e-12);
    // matching site: acts as the uncontrolled fragment on that register
    State init2 = basis_state(lay.q_total(), 2);  // electron |10> = site 2
    State got = simulate(ctrl, init2);
    Circuit full;
    full.num_qubits = lay.q_total();
    full.append({GateKind::X, 1, 0.0, {}});
    full.append(embedded);
    State want = simulate(full, basis_state(lay.q_total()));
    CHECK(std::abs(fidelity(got, want) - 1.0) <= 1e-10);
}

TEST_CASE("lf circuit prepares the grid lf state") {
    ModelParams p;
    p.N = 2;
    for (double alpha : {0.0, 0.5, 1.0}) {
        GridSpec grid = default_grid(5, alpha);
        Circuit c = build_lf_circuit(p, alpha, grid, exact_vacuum_u0(grid));
        State out = simulate(c, basis_state(c.num_qubits));
        CHECK(fidelity_grid_lf(out, p, alpha, grid) > 0.995);
    }
}

TEST_CASE("register layout") {
    ModelParams p;
    p.N = 4;
    GridSpec grid = default_grid(6, 1.0);
    RegisterLayout lay = layout_of(p, grid);
    CHECK(lay.k_E == 2);
    CHECK(lay.q_total() == 26);
    CHECK(lay.electron_qubits() == std::vector<int>{0, 1});
    auto r3 = lay.phonon_register(3);
    CHECK(int(r3.size()) == 6);
    CHECK(r3.front() == 2 + 3 * 6);
}

TEST_CASE("default grid widens for large alpha") {
    CHECK(default_grid(6, 0.0).W == 6.0);
    CHECK(default_grid(6, 4.0).W > 6.0);
}
