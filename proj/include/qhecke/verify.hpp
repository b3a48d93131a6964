#pragma once

// Named verification suites. Each suite runs a family of identity checks at
// pinned desk-scale sizes (optionally narrowed by the caller) and reports one
// named pass/fail result per family. All checks are exact symbolic or exact
// rational computations except the rotation residual, which carries a pinned
// 1e-9 tolerance.

#include <optional>
#include <string>
#include <vector>

#include "qhecke/rational.hpp"
#include "qhecke/tableau.hpp"

namespace qhecke {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // residuals, counts, or the first failing case
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

struct VerifyOptions {
    std::optional<int> n;        // cap on the degree
    std::optional<int> d;        // cap on the alphabet size
    std::optional<double> t;     // rotation angle override
    std::optional<Rational> q0;  // evaluation point override for oracles
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Runs one suite; throws std::invalid_argument for an unknown name. Honors
// the QHECKE_THREADS environment variable for per-partition parallelism.
SuiteResult run_suite(const std::string& suite, const VerifyOptions& opt = {});

// Standard-tableau count by direct backtracking placement: independent of the
// generating-sequence enumeration and of the hook length formula.
long count_standard_tableaux_oracle(const Partition& p);

}  // namespace qhecke
