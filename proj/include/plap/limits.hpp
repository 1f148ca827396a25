#pragma once

#include "plap/radical.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace plap {

enum class LimitStatus { Converged, DivergesToInfinity, Inconclusive };

struct LimitEstimate {
    std::optional<double> value;
    /// Present when the limit was read off an exactly constant tail.
    std::optional<RadicalSum> exactValue;
    LimitStatus status = LimitStatus::Inconclusive;
    int windowFirst = 0, windowLast = 0;
    std::vector<double> tailValues;
    std::string note;
};

/// Limit of seq(r) as r → ∞, judged from the finite window [first, horizon].
///
/// Three stages, first verdict wins:
///  1. exactly constant tail (last quarter, at least 8 terms) → Converged
///     with the exact value;
///  2. strictly increasing tail with either a huge last term or uniform
///     geometric growth down a √2-spaced ladder → DivergesToInfinity;
///  3. Richardson/Neville extrapolation to 0 along the ladder, run in both
///     the 1/r and the 1/√r variable (the second captures half-power
///     asymptotics); the route with the smaller last correction wins and
///     Converged needs that correction below 1e-5 relative. Estimates
///     within 1e-7 of 0 snap to exactly 0.
/// Anything else is Inconclusive.
LimitEstimate estimate_limit(const std::function<RadicalSum(int)>& seq, int first,
                             int horizon);

} // namespace plap
