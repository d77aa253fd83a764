#pragma once

#include <functional>
#include <string>
#include <vector>

#include "evchar/characters.hpp"

namespace evchar {

/// kQuick runs every check at reduced bounds (smoke scale, seconds);
/// kFull runs the complete verification sweep at the documented bounds.
enum class SuiteLevel { kQuick, kFull };

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    double seconds = 0.0;
    std::string detail;  // first failure, or a short summary when passing
};

/// Runs the 15-criterion verification suite. on_result, when set, is called
/// after each criterion finishes (for incremental PASS/FAIL lines).
std::vector<CriterionResult> run_acceptance(
    CharEngine& engine, SuiteLevel level, int workers = 1,
    const std::function<void(const CriterionResult&)>& on_result = nullptr);

std::string format_result_line(const CriterionResult& r);

}  // namespace evchar
