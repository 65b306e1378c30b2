#pragma once

#include <string>
#include <vector>

namespace qsocle {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool checks_passed = false;
    double seconds = 0.0;
    double limit_seconds = 0.0;
    std::vector<std::string> failures;

    bool passed() const noexcept { return checks_passed && seconds < limit_seconds; }
};

/// Criterion ids 1..6.
std::vector<int> acceptance_ids();

/// Runs one criterion and times it. Throws InvalidParameters for an unknown id.
CriterionResult run_criterion(int id);

std::vector<CriterionResult> run_acceptance();

/// "PASS criterion N: name (t s, limit L s)" followed by one indented line
/// per failure.
std::string format_result(const CriterionResult& result);

}  // namespace qsocle
