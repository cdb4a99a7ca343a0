#pragma once

#include "coplan/model.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace coplan {

/// One task placed on one participant. Short entries occupy the contiguous
/// GMT interval `span`; long entries occupy the strictly increasing working
/// dates in `days`.
struct ScheduleEntry {
  std::size_t task = 0;
  std::size_t participant = 0;
  Interval span;
  std::vector<DayDate> days;

  bool operator==(const ScheduleEntry&) const = default;
};

struct Schedule {
  std::vector<ScheduleEntry> entries;

  bool operator==(const Schedule&) const = default;
};

/// Latest end over all entries: the end instant (short) or the last worked
/// date (long).
Answer completion(const ProblemInstance& instance, const Schedule& schedule);

enum class ViolationKind {
  ProjectStart,
  Dependency,
  Availability,
  MealBreak,
  Unavailability,
  Overlap,
  BreakBetween,
  BreakAfter,
  Horizon,
};

std::string_view to_string(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::size_t task = 0;        ///< offending (or first offending) task
  std::size_t participant = 0; ///< participant the violation is charged to
  std::string detail;
};

/// Malformed schedule: unknown ids, a task missing or repeated, an entry whose
/// size disagrees with the task duration.
class ScheduleError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Every violated constraint, in check order; empty iff the schedule is
/// feasible.
std::vector<Violation> validate_schedule(const ProblemInstance& instance, const Schedule& schedule);

/// Same checks as validate_schedule, stopping at the first violation.
bool is_feasible(const ProblemInstance& instance, const Schedule& schedule);

/// Human-readable one-line-per-task rendering.
std::string describe(const ProblemInstance& instance, const Schedule& schedule);

} // namespace coplan
