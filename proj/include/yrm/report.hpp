/**
 * @file report.hpp
 * @brief Verification report records shared by the R-matrix and shift-operator checks.
 */
#pragma once

#include <string>
#include <vector>

namespace yrm {

/// Outcome of one check on one instance; `first_discrepancy` is empty on success.
struct CheckResult {
    std::string check;
    std::string instance;
    bool pass = true;
    std::string first_discrepancy;
};

using Report = std::vector<CheckResult>;

inline bool all_pass(const Report& r) {
    for (const auto& c : r)
        if (!c.pass) return false;
    return true;
}

}  // namespace yrm
