// Acceptance suite: runs the full verification battery and prints one
// pass/fail line per criterion. Exits non-zero if any criterion fails.

#include <cstdio>

#include "jc/verify.hpp"

int main() {
    const std::vector<jc::verify::CheckResult> results = jc::verify::run_all(8);
    int failures = 0;
    int index = 0;
    for (const auto& r : results) {
        ++index;
        std::printf("[%s] criterion %d %-24s max_dev=%.3e tol=%.0e%s%s\n",
                    r.passed ? "PASS" : "FAIL", index, r.name.c_str(), r.max_deviation,
                    r.tolerance, r.detail.empty() ? "" : "  ", r.detail.c_str());
        if (!r.passed) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", int(results.size()) - failures, results.size());
    return failures == 0 ? 0 : 1;
}
