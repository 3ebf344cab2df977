// Structural verification battery: one pass/fail line per criterion.
#include <cstdio>

#include "gcm/checks.hpp"

int main() {
    const std::vector<gcm::CheckResult> results = gcm::run_all_checks();
    int failures = 0;
    for (const auto& r : results) {
        std::printf("[%s] %2d %s —%s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.label.c_str(), r.detail.c_str());
        if (!r.pass) ++failures;
    }
    std::printf("%zu/%zu criteria passed\n", results.size() - failures,
                results.size());
    return failures == 0 ? 0 : 1;
}
