#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hardy/catalogue.hpp"

namespace hardy {

struct SuiteRow {
    std::string case_id;
    std::string theorem_id;
    double alpha = 1, p = 0, gamma = 0, theta = 0, beta = 0;
    std::string scale;
    double lhs = 0, rhs = 0, ratio = 0;
    double lhs_sensitivity = 0, rhs_sensitivity = 0;
    bool hypotheses_ok = true;
    std::string verdict;
};

inline const std::vector<std::string> suite_names = {"calculus", "theorems", "reductions", "oracle", "sharpness"};

// Rows sorted by case_id; identical for identical (name, seed, horizon_factor).
// In the check suites (calculus, reductions, oracle) lhs is the measured
// residual or discrepancy and rhs its tolerance.
std::vector<SuiteRow> run_suite(const std::string& name, std::uint64_t seed, double horizon_factor = 1.0);

SuiteRow row_from_report(const Case& c, const VerificationReport& rep);

std::string suite_csv(const std::vector<SuiteRow>& rows);
bool all_verified(const std::vector<SuiteRow>& rows);

// criterion-style summary lines, e.g. "theorems: 400 rows, 400 verified"
std::string suite_summary(const std::string& name, const std::vector<SuiteRow>& rows);

// cases of the theorem soundness suite (thm1..thm4 on Z and 2^Z)
std::vector<Case> soundness_cases(std::uint64_t seed, int per_scale = 50, double horizon_factor = 1.0);

}  // namespace hardy
