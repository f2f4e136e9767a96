#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace latt {

struct SuiteResult {
    std::string suite;
    int total = 0;
    int passed = 0;
    std::vector<std::string> failures;  // instance-indexed messages, sorted

    bool ok() const { return passed == total; }
};

// Known suites: labelling, doubling, galois, dimension, tafs, families,
// dilworth. Deterministic given (seed, count) regardless of jobs.
SuiteResult run_suite(const std::string& name, int count, uint64_t seed, int jobs);

std::vector<std::string> suite_names();

}  // namespace latt
