#include <chrono>
#include <cstdio>

#include "fragments.hpp"
#include "model.hpp"
#include "simulate.hpp"

// Compares the OpenMP simulation kernel against the serial reference on the
// full LF preparation circuit at a few register sizes.

namespace {

template <typename F>
double timed(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main() {
    using namespace polaron;
    std::printf("%6s %6s %8s %12s %12s %9s %12s\n", "N", "m", "qubits", "serial_s", "openmp_s",
                "speedup", "fid_diff");
    for (auto [N, m] : {std::pair{2, 6}, std::pair{2, 8}, std::pair{4, 4}, std::pair{4, 5}}) {
        ModelParams p;
        p.N = N;
        p.g = g_of_lambda(p.t, p.omega0, 1.0);
        GridSpec grid = default_grid(m, 1.0);
        Circuit c = build_lf_circuit(p, 1.0, grid, exact_vacuum_u0(grid));

        State serial_out, parallel_out;
        double ts = timed([&] { serial_out = simulate_serial(c, basis_state(c.num_qubits)); });
        double tp = timed([&] { parallel_out = simulate(c, basis_state(c.num_qubits)); });
        double fd = 1.0 - fidelity(serial_out, parallel_out);
        std::printf("%6d %6d %8d %12.4f %12.4f %9.2fx %12.3e\n", N, m, c.num_qubits, ts, tp,
                    ts / tp, fd);
    }
    return 0;
}
