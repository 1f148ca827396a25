#pragma once

#include <string>
#include <vector>

namespace plap {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

/// Runs the numbered reproduction criteria and returns one result per
/// criterion, in id order. `only` filters by criterion name; an unknown
/// name throws std::invalid_argument. The certificate audit (criterion 9)
/// covers solver runs made by the other criteria in the same invocation.
std::vector<CriterionResult> run_acceptance(const std::vector<std::string>& only = {});

} // namespace plap
