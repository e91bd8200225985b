#pragma once

#include <string>
#include <vector>

namespace seljac {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // grid size on success, first counterexample on failure
};

/// Exact identity grids for the combinatorial kernel.
std::vector<CheckResult> verify_identities();

/// Cross-checks between the three independent evaluation routes
/// (brute-force expansion, closed form, spectral density).
std::vector<CheckResult> verify_oracles();

/// Limit formulas against the rational-function route and against each other.
std::vector<CheckResult> verify_limits();

/// Factorization of power-sum limits into single-part limits.
std::vector<CheckResult> verify_conjecture();

/// suite in {"all", "identities", "oracles", "limits", "conjecture"}.
std::vector<CheckResult> verify_suite(const std::string& suite);

} // namespace seljac
