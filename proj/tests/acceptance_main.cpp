// Copyright 2026 the tstfnbp authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: runs the full cross-verification suite and prints exactly
// one PASS/FAIL line per criterion.  Exits nonzero if any criterion fails.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <thread>

#include "tstfnbp/verification.hpp"

int main(int argc, char** argv) {
    tstfnbp::VerifyConfig cfg;
    unsigned hw = std::thread::hardware_concurrency();
    cfg.workers = hw == 0 ? 1 : (hw < 4 ? hw : 4);
    for (int i = 1; i + 1 < argc; i += 2) {
        if (std::strcmp(argv[i], "--seed") == 0)
            cfg.seed = std::strtoull(argv[i + 1], nullptr, 10);
        else if (std::strcmp(argv[i], "--workers") == 0)
            cfg.workers = static_cast<unsigned>(std::strtoul(argv[i + 1], nullptr, 10));
    }

    auto results = tstfnbp::run_acceptance_suite(cfg);
    int total = 0, passed = 0;
    for (const auto& r : results) {
        std::printf("[%s] criterion-%02d %-24s (%.1fs) %s\n", r.passed ? "PASS" : "FAIL",
                    ++total, r.name.c_str(), r.seconds, r.detail.c_str());
        std::fflush(stdout);
        passed += r.passed ? 1 : 0;
    }
    std::printf("acceptance: %d/%d criteria passed\n", passed, total);
    return passed == total ? EXIT_SUCCESS : EXIT_FAILURE;
}
