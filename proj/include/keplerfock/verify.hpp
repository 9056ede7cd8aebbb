#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "keplerfock/halfint.hpp"

namespace keplerfock::verify {

struct CheckResult {
    std::string module;
    std::string check;
    double value;
    double threshold;
    bool pass;
};

struct RunConfig {
    HalfInt j_max{7}; // 7/2
    std::uint64_t seed{20260808};
    std::map<std::string, double> tolerances; // by check name or module name

    // Reads KEPLER_FOCK_SEED from the environment when present.
    static RunConfig defaults();
};

std::vector<CheckResult> verify_classical(const RunConfig& config);
std::vector<CheckResult> verify_su2rep(const RunConfig& config);
std::vector<CheckResult> verify_dirac(const RunConfig& config);
std::vector<CheckResult> verify_quaternion(const RunConfig& config);
std::vector<CheckResult> verify_weyl(const RunConfig& config);
std::vector<CheckResult> verify_fock(const RunConfig& config);
std::vector<CheckResult> verify_madelung(const RunConfig& config);

std::vector<CheckResult> verify_all(const RunConfig& config);

bool all_pass(const std::vector<CheckResult>& results);

} // namespace keplerfock::verify
