// Copyright 2026 the belltet authors
// SPDX-License-Identifier: MIT
//
// Reduced-count invariant suite covering every module, packaged for the CLI.
// The report is deterministic for a fixed seed — no timestamps, no durations —
// so identical invocations produce byte-identical JSON.

#ifndef BELLTET_SELFTEST_HPP
#define BELLTET_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace belltet {

struct SelftestOptions {
    std::uint64_t seed = 0;
    // Swaps the depolarizing family for the unnormalized variant so the
    // trace-preservation check demonstrably fails.
    bool unnormalized_depolarizing = false;
};

struct SelftestCheck {
    std::string name;
    bool passed = false;
    std::string detail;  // deterministic: numbers via io::format_double
};

struct SelftestReport {
    std::uint64_t seed = 0;
    bool all_passed = false;
    std::vector<SelftestCheck> checks;
};

SelftestReport run_selftest(const SelftestOptions& options = {});

// {"seed", "all_passed", "checks": [{"name","passed","detail"}...]}
std::string selftest_json(const SelftestReport& report);

}  // namespace belltet

#endif  // BELLTET_SELFTEST_HPP
