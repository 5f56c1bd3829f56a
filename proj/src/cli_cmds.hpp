#pragma once

#include <string>
#include <vector>

#include "model.hpp"
#include "resources.hpp"

namespace polaron {

struct RunConfig {
    double t = 1.0;
    double omega0 = 1.0;
    int N = 8;
    int nmax = 12;
    std::vector<double> lambdas;
    int m = 6;
    double W = 6.0;
    int degree = 22;
    double alpha = 0.0;
    std::string policy_file;   // JSON DecompositionPolicy; empty = default
    std::string out;           // output table path; empty = stdout
    std::string format = "csv";
    std::vector<int> Ns;       // tcount sweep
    bool seedless = true;      // accepted for symmetry; nothing here is random

    DecompositionPolicy load_policy() const;
    void validate_common() const;  // throws std::invalid_argument on bad config
};

// Exit codes: 0 success, 2 config error, 3 numerical failure.
int cmd_overlap(const RunConfig& cfg);
int cmd_circuit_verify(const RunConfig& cfg);
int cmd_tcount(const RunConfig& cfg);
int cmd_ratio(const RunConfig& cfg);

}  // namespace polaron
