#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gcm {

struct CheckResult {
    int id = 0;
    std::string label;
    bool pass = false;
    std::string detail; // one-line summary of what was measured
};

// The full structural verification battery over the default corpus.
// Deterministic; each entry is exact at its stated tolerance. Used by
// both the acceptance runner and the CLI verify-all subcommand.
std::vector<CheckResult> run_all_checks(bool fail_fast = false,
                                        std::uint64_t seed = 1);

} // namespace gcm
