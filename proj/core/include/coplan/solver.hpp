#pragma once

#include "coplan/schedule.hpp"

#include <stdexcept>

namespace coplan {

/// No schedule completes within the horizon.
class InfeasibleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Solution {
  Answer answer;
  Schedule witness;
};

/// Earliest project completion over all feasible schedules, by
/// dependency-ordered branch-and-bound over (start slot, participant)
/// placements. Among optimal schedules the witness is the lexicographically
/// first by (task order, earlier start, lower participant index).
/// Throws InfeasibleError.
Solution solve_optimal(const ProblemInstance& instance);

/// Independent check of solve_optimal: enumerates every assignment of tasks to
/// participants and every placement on the slot grid without pruning, keeps
/// those validate_schedule accepts, and returns the minimum completion.
/// Throws InfeasibleError.
Answer brute_force_oracle(const ProblemInstance& instance);

} // namespace coplan
