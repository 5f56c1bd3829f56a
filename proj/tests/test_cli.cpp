#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "cli_cmds.hpp"

using namespace polaron;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/polaron_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("overlap command writes the csv schema") {
    TempFile f("overlap.csv");
    RunConfig cfg;
    cfg.N = 2;
    cfg.nmax = 10;
    cfg.lambdas = {0.5, 1.0};
    cfg.out = f.path;
    CHECK(cmd_overlap(cfg) == 0);
    std::string text = slurp(f.path);
    CHECK(text.find("lambda") != std::string::npos);
    CHECK(text.find("omega_gs") != std::string::npos);
    CHECK(text.find("variational") != std::string::npos);
    CHECK(text.find("zero") != std::string::npos);
}

TEST_CASE("overlap command json format") {
    TempFile f("overlap.json");
    RunConfig cfg;
    cfg.N = 2;
    cfg.nmax = 10;
    cfg.lambdas = {1.0};
    cfg.out = f.path;
    cfg.format = "json";
    CHECK(cmd_overlap(cfg) == 0);
    std::string text = slurp(f.path);
    CHECK(text.find("\"omega_gs\"") != std::string::npos);
}

TEST_CASE("config errors exit 2") {
    RunConfig cfg;
    cfg.N = 3;  // not a power of two
    cfg.lambdas = {1.0};
    CHECK(cmd_overlap(cfg) == 2);
    RunConfig bad;
    bad.format = "xml";
    bad.lambdas = {1.0};
    bad.N = 2;
    CHECK(cmd_overlap(bad) == 2);
    RunConfig pol;
    pol.Ns = {64};
    pol.policy_file = "/nonexistent/policy.json";
    CHECK(cmd_tcount(pol) == 2);
}

TEST_CASE("circuit verify succeeds at desk scale") {
    RunConfig cfg;
    cfg.N = 2;
    cfg.m = 4;
    cfg.alpha = 0.5;
    cfg.degree = 12;
    TempFile f("verify.csv");
    cfg.out = f.path;
    CHECK(cmd_circuit_verify(cfg) == 0);
    CHECK(slurp(f.path).find("fidelity") != std::string::npos);
}

TEST_CASE("tcount command emits the table") {
    RunConfig cfg;
    cfg.Ns = {64, 128};
    TempFile f("tcount.csv");
    cfg.out = f.path;
    CHECK(cmd_tcount(cfg) == 0);
    std::string text = slurp(f.path);
    CHECK(text.find("N,m,d,policy_id,t_vacuum,t_lf") != std::string::npos);
    CHECK(text.find("64,6,22,default") != std::string::npos);
}

TEST_CASE("ratio command emits the table") {
    RunConfig cfg;
    cfg.N = 2;
    cfg.nmax = 10;
    cfg.lambdas = {0.0, 1.0};
    TempFile f("ratio.csv");
    cfg.out = f.path;
    CHECK(cmd_ratio(cfg) == 0);
    std::string text = slurp(f.path);
    CHECK(text.find("N,m,lambda,alpha,omega_lf,omega_vac,t_lf,t_vac,ratio") != std::string::npos);
}

TEST_CASE("custom policy file is honored") {
    TempFile pol("policy.json");
    {
        std::ofstream out(pol.path);
        out << policy_to_json(DecompositionPolicy{"heavy", 60, 4, McxScheme::linear_clean});
    }
    RunConfig cfg;
    cfg.Ns = {64};
    cfg.policy_file = pol.path;
    TempFile f("tcount_heavy.csv");
    cfg.out = f.path;
    CHECK(cmd_tcount(cfg) == 0);
    CHECK(slurp(f.path).find("heavy") != std::string::npos);
}
