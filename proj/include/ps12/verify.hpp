#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ps12 {

struct Report {
    std::string suite;
    bool pass = false;
    double worst_residual = 0.0;
    double seconds = 0.0;
    std::string detail;
};

/// All suite names, in the order the acceptance criteria list them.
const std::vector<std::string>& verification_suites();

Report run_suite(const std::string& name, std::uint64_t seed);

/// Empty selection runs everything.
std::vector<Report> run_suites(std::vector<std::string> names, std::uint64_t seed);

}  // namespace ps12
