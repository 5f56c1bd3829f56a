#include <CLI11.hpp>

#include "cli_cmds.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Holstein polaron warm-start pipeline"};
    app.require_subcommand(1);

    polaron::RunConfig cfg;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--t", cfg.t, "hopping amplitude");
        sub->add_option("--omega0", cfg.omega0, "phonon frequency");
        sub->add_option("--N", cfg.N, "site count (power of two)");
        sub->add_option("--nmax", cfg.nmax, "per-site phonon cutoff");
        sub->add_option("--m", cfg.m, "qubits per phonon register");
        sub->add_option("--W", cfg.W, "grid half-width");
        sub->add_option("--degree", cfg.degree, "QET polynomial degree");
        sub->add_option("--policy", cfg.policy_file, "decomposition policy JSON file");
        sub->add_option("--out", cfg.out, "output table path (default stdout)");
        sub->add_option("--format", cfg.format, "csv or json");
        sub->add_flag("--seedless", cfg.seedless, "assert seed-free operation (always true)");
    };

    auto* ov = app.add_subcommand("overlap", "ground-state overlap sweep over lambda");
    add_common(ov);
    ov->add_option("--lambda", cfg.lambdas, "lambda grid")->delimiter(',');

    auto* cv = app.add_subcommand("circuit-verify", "simulate and verify the preparation circuits");
    add_common(cv);
    cv->add_option("--alpha", cfg.alpha, "displacement amplitude");

    auto* tc = app.add_subcommand("tcount", "T-count table over a grid of N");
    add_common(tc);
    tc->add_option("--Ns", cfg.Ns, "site-count grid")->delimiter(',');

    auto* ra = app.add_subcommand("ratio", "QPE preparation cost ratio over lambda");
    add_common(ra);
    ra->add_option("--lambda", cfg.lambdas, "lambda grid")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (ov->parsed()) return polaron::cmd_overlap(cfg);
    if (cv->parsed()) return polaron::cmd_circuit_verify(cfg);
    if (tc->parsed()) return polaron::cmd_tcount(cfg);
    if (ra->parsed()) return polaron::cmd_ratio(cfg);
    return 2;
}
