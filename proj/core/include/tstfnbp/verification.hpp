// Copyright 2026 the tstfnbp authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tstfnbp {

/// Outcome of one acceptance check.
struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;   // worst deviations, tolerances, or the error message
    double seconds = 0.0; // wall time of the check
};

struct VerifyConfig {
    std::uint64_t seed = 42;
    unsigned workers = 1;
};

/// Runs the full cross-verification suite: sampler-vs-transform agreement,
/// subordination identities, special-case collapses, moment asymptotics and
/// formulas, overdispersion, long-range dependence, PDE residuals, first
/// passage, the Levy measure, and the special-function example battery with
/// its extended-precision Mittag-Leffler oracle.  Results are deterministic
/// per (seed, workers) pair.  A check that throws is reported as failed with
/// the exception message; the function itself does not throw.
std::vector<CheckResult> run_acceptance_suite(const VerifyConfig& cfg = {});

}  // namespace tstfnbp
