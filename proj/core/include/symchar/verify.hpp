#pragma once

#include <string>
#include <vector>

namespace symchar {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

enum class VerifyLevel { quick, full };

// Cross-oracle suites: Murnaghan-Nakayama vs Stanley map sums vs Kerov
// polynomial evaluation, cumulant consistency, homogeneity, transportation
// coefficients, positivity, covariance identities, and the geometric
// R_3/R_4 audit. quick keeps every sweep to a couple of seconds.
std::vector<CheckResult> run_verification(VerifyLevel level, int threads = 1);

}  // namespace symchar
