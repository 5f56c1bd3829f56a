#include "cli_cmds.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fragments.hpp"
#include "lf.hpp"
#include "qet.hpp"
#include "simulate.hpp"

namespace polaron {

namespace {

const char* mode_name(AlphaMode m) {
    switch (m) {
        case AlphaMode::zero: return "zero";
        case AlphaMode::strong_coupling: return "strong";
        case AlphaMode::variational: return "variational";
        case AlphaMode::explicit_value: return "explicit";
    }
    return "?";
}

int write_out(const std::string& path, const std::string& body) {
    if (path.empty()) {
        std::cout << body;
        return 0;
    }
    std::ofstream f(path);
    if (!f) {
        std::cerr << "cannot open output path: " << path << "\n";
        return 2;
    }
    f << body;
    return 0;
}

}  // namespace

DecompositionPolicy RunConfig::load_policy() const {
    if (policy_file.empty()) return DecompositionPolicy{};
    std::ifstream f(policy_file);
    if (!f) throw std::invalid_argument("cannot read policy file: " + policy_file);
    std::stringstream ss;
    ss << f.rdbuf();
    return policy_from_json(ss.str());
}

void RunConfig::validate_common() const {
    if (format != "csv" && format != "json") throw std::invalid_argument("format must be csv or json");
    if (m < 1 || m > 16) throw std::invalid_argument("m out of range");
    if (W <= 0) throw std::invalid_argument("W must be > 0");
    for (double l : lambdas)
        if (l < 0) throw std::invalid_argument("lambda must be >= 0");
}

int cmd_overlap(const RunConfig& cfg) {
    try {
        cfg.validate_common();
        if (cfg.lambdas.empty()) throw std::invalid_argument("empty lambda grid");
        ModelParams base;
        base.t = cfg.t;
        base.omega0 = cfg.omega0;
        base.N = cfg.N;
        base.n_max = cfg.nmax;
        base.validate();
        std::vector<AlphaChoice> modes{{AlphaMode::zero, 0.0},
                                       {AlphaMode::strong_coupling, 0.0},
                                       {AlphaMode::variational, 0.0}};
        std::vector<OverlapResult> rows;
        try {
            rows = overlap_sweep(base, cfg.lambdas, modes);
        } catch (const NumericalError& e) {
            std::cerr << "numerical failure: " << e.what() << "\n";
            return 3;
        }
        std::ostringstream os;
        os.precision(12);
        if (cfg.format == "csv") {
            os << "lambda,mode,alpha,omega_gs,E_gs,N,n_max\n";
            for (const auto& r : rows)
                os << r.lambda << ',' << mode_name(r.mode) << ',' << r.alpha_used << ','
                   << r.omega_gs << ',' << r.ground_energy << ',' << r.params.N << ','
                   << r.params.n_max << '\n';
        } else {
            nlohmann::json j = nlohmann::json::array();
            for (const auto& r : rows)
                j.push_back({{"lambda", r.lambda},
                             {"mode", mode_name(r.mode)},
                             {"alpha", r.alpha_used},
                             {"omega_gs", r.omega_gs},
                             {"E_gs", r.ground_energy},
                             {"N", r.params.N},
                             {"n_max", r.params.n_max}});
            os << j.dump(2) << '\n';
        }
        return write_out(cfg.out, os.str());
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_circuit_verify(const RunConfig& cfg) {
    try {
        cfg.validate_common();
        ModelParams p;
        p.t = cfg.t;
        p.omega0 = cfg.omega0;
        p.N = cfg.N;
        p.n_max = cfg.nmax;
        p.validate();
        GridSpec grid = default_grid(cfg.m, cfg.alpha);
        if (cfg.W > grid.W) grid.W = cfg.W;
        const RegisterLayout lay = layout_of(p, grid);
        if (lay.q_total() > kMaxSimQubits) {
            std::cerr << "config error: layout needs " << lay.q_total()
                      << " qubits, above the simulation cap of " << kMaxSimQubits << "\n";
            return 2;
        }
        std::ostringstream os;
        os.precision(12);
        os << "q_total " << lay.q_total() << "\n";

        const Circuit u0 = exact_vacuum_u0(grid);
        const State out = simulate(build_lf_circuit(p, cfg.alpha, grid, u0),
                                   basis_state(lay.q_total()));
        os << "lf_fidelity " << fidelity_grid_lf(out, p, cfg.alpha, grid) << "\n";

        const VacuumPrep prep = prepare_vacuum_u0(cfg.m, grid.W, cfg.degree);
        const State v = simulate(prep.circuit, basis_state(cfg.m + 3));
        const double succ = success_probability(v, cfg.m);
        os << "u0_fidelity " << fidelity(postselect_data(v, cfg.m), grid_vacuum(grid)) << "\n";
        os << "amplification_success_amplitude " << std::sqrt(succ) << "\n";
        os << "p_succ " << prep.plan.p_succ << "\n";
        os << "m_prime " << prep.plan.m_prime << "\n";
        return write_out(cfg.out, os.str());
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
}

int cmd_tcount(const RunConfig& cfg) {
    try {
        cfg.validate_common();
        if (cfg.Ns.empty()) throw std::invalid_argument("empty N grid");
        const DecompositionPolicy policy = cfg.load_policy();
        std::ostringstream os;
        if (cfg.format == "csv") {
            os << "N,m,d,policy_id,t_vacuum,t_lf\n";
            for (int N : cfg.Ns)
                os << N << ',' << cfg.m << ',' << cfg.degree << ',' << policy.id << ','
                   << tcount_vacuum(N, cfg.m, cfg.degree, policy) << ','
                   << tcount_lf(N, cfg.m, cfg.degree, policy) << '\n';
        } else {
            nlohmann::json j = nlohmann::json::array();
            for (int N : cfg.Ns)
                j.push_back({{"N", N},
                             {"m", cfg.m},
                             {"d", cfg.degree},
                             {"policy_id", policy.id},
                             {"t_vacuum", tcount_vacuum(N, cfg.m, cfg.degree, policy)},
                             {"t_lf", tcount_lf(N, cfg.m, cfg.degree, policy)}});
            os << j.dump(2) << '\n';
        }
        return write_out(cfg.out, os.str());
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
}

int cmd_ratio(const RunConfig& cfg) {
    try {
        cfg.validate_common();
        if (cfg.lambdas.empty()) throw std::invalid_argument("empty lambda grid");
        ModelParams base;
        base.t = cfg.t;
        base.omega0 = cfg.omega0;
        base.N = cfg.N;
        base.n_max = cfg.nmax;
        base.validate();
        const DecompositionPolicy policy = cfg.load_policy();
        std::vector<CostRatioPoint> pts;
        try {
            pts = cost_ratio_sweep(base, cfg.lambdas, cfg.m, policy, cfg.degree);
        } catch (const NumericalError& e) {
            std::cerr << "numerical failure: " << e.what() << "\n";
            return 3;
        }
        std::ostringstream os;
        os.precision(12);
        if (cfg.format == "csv") {
            os << "N,m,lambda,alpha,omega_lf,omega_vac,t_lf,t_vac,ratio\n";
            for (const auto& r : pts)
                os << cfg.N << ',' << cfg.m << ',' << r.lambda << ',' << r.alpha << ','
                   << r.omega_lf << ',' << r.omega_vac << ',' << r.t_lf << ',' << r.t_vac << ','
                   << r.ratio << '\n';
        } else {
            nlohmann::json j = nlohmann::json::array();
            for (const auto& r : pts)
                j.push_back({{"N", cfg.N},
                             {"m", cfg.m},
                             {"lambda", r.lambda},
                             {"alpha", r.alpha},
                             {"omega_lf", r.omega_lf},
                             {"omega_vac", r.omega_vac},
                             {"t_lf", r.t_lf},
                             {"t_vac", r.t_vac},
                             {"ratio", r.ratio}});
            os << j.dump(2) << '\n';
        }
        return write_out(cfg.out, os.str());
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace polaron
