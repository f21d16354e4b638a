#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "commhom/bigint.hpp"

namespace commhom {

struct CheckOptions {
    int max_rank = 0;       // 0 = each check's own documented range
    int jobs = 1;
    std::uint64_t seed = 0;

    int clamp(int documented_max) const { return max_rank > 0 && max_rank < documented_max ? max_rank : documented_max; }
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // first failure, or a short summary of what ran
};

struct Check {
    std::string name;
    std::string summary;
    std::function<CheckResult(const CheckOptions&)> run;
};

/* The named theorem suite behind `verify`; one entry per acceptance claim. */
const std::vector<Check>& check_registry();

CheckResult run_check(const std::string& name, const CheckOptions& options);
std::vector<CheckResult> run_all_checks(const CheckOptions& options);

}  // namespace commhom
