#pragma once

// Differential property suites: each suite draws random instances and checks
// a construction against an independent route.

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace dualmin {

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool ok() const noexcept { return failures == 0; }
};

std::vector<std::string> selftest_suite_names();

/// Runs one suite by name. Throws UnsupportedError on an unknown name.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::size_t cases);

/// Runs every suite (concurrently) and writes one PASS/FAIL line per suite.
/// Returns true iff all suites pass.
bool run_selftest(std::uint64_t seed, std::size_t cases, std::ostream& out);

}  // namespace dualmin
