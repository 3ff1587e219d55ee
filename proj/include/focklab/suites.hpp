#pragma once

#include <string>

#include "focklab/deform.hpp"
#include "focklab/quantize.hpp"

namespace focklab {

struct SuiteReport {
    std::string suite;
    int cases = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::vector<std::string> diagnostics;  // filled on failure
};

// known suites: wick majf moments twopoint modular malleability
// transversality cas00 quantization; tol <= 0 picks the suite default
SuiteReport run_suite(const std::string& name, std::uint64_t seed, double tol = 0.0);

std::vector<std::string> suite_names();

}  // namespace focklab
