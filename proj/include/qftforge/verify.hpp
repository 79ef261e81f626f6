#pragma once

#include <string>
#include <vector>

namespace qftforge::verify {

struct Check {
    std::string name;
    bool pass = false;
    double error = 0.0;  // worst observed deviation
};

// Oracle suite behind the `verify` CLI subcommand: DFT-matrix equivalence of
// both builders (after their fixed readout permutations), the tensor-product
// factorization identity and its recursive build-up, binary-fraction phase
// identities, and both inverse compositions. max_n <= 10.
std::vector<Check> run_oracle_suite(int max_n);

bool all_passed(const std::vector<Check>& checks);

}  // namespace qftforge::verify
