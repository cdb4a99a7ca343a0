#pragma once

#include "coplan/temporal.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace coplan {

inline constexpr std::size_t kTaskCount = 3;
inline constexpr std::size_t kParticipantCount = 2;

enum class DependencyType { Fork, Chain, Join };

inline constexpr std::array kDependencyTypes = {DependencyType::Fork, DependencyType::Chain, DependencyType::Join};

std::string_view to_string(DependencyType t);
DependencyType parse_dependency_type(std::string_view text);

enum class TimeUnit { Hour, Day };

TimeUnit unit_of(Category c);
std::string_view to_string(TimeUnit u);

/// A duration tagged with its unit, as it arrives from outside.
struct Quantity {
  int value = 0;
  TimeUnit unit = TimeUnit::Hour;

  auto operator<=>(const Quantity&) const = default;
};

/// Finish-before-start ordering between two tasks (indices into the task list).
struct Edge {
  std::size_t before = 0;
  std::size_t after = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Edge set implied by a topology over tasks A, B, C (indices 0, 1, 2).
std::vector<Edge> topology_edges(DependencyType t);

class DependencyGraph {
public:
  DependencyGraph() = default;
  explicit DependencyGraph(DependencyType t) : type_(t), edges_(topology_edges(t)) {}

  DependencyType type() const { return type_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::vector<std::size_t> predecessors(std::size_t task) const;

  bool operator==(const DependencyGraph&) const = default;

private:
  DependencyType type_ = DependencyType::Fork;
  std::vector<Edge> edges_;
};

enum class WorkingDays { Any, Weekdays };

std::string_view to_string(WorkingDays w);
WorkingDays parse_working_days(std::string_view text);

/// Cap on consecutive worked slots followed by a mandatory rest, both counted
/// in the instance's unit.
struct BreakAfter {
  int max_consecutive = 0;
  int rest = 0;

  auto operator<=>(const BreakAfter&) const = default;
};

/// General availability in the short category: a local working window and an
/// optional meal break, both in the participant's zone.
struct ClockAvailability {
  std::string zone_label;
  ZoneOffset zone;
  ClockWindow working;
  std::optional<ClockWindow> meal;

  bool operator==(const ClockAvailability&) const = default;
};

struct Task {
  std::string label; ///< generic label, "Task A"
  std::string name;  ///< display name
  int duration = 0;  ///< hours (short) or days (long)

  bool operator==(const Task&) const = default;
};

struct Participant {
  std::string label; ///< generic label, "Agent1"
  std::string name;

  // Short category.
  std::optional<ClockAvailability> clock;
  std::vector<Interval> unavailable_intervals;

  // Long category.
  WorkingDays working_days = WorkingDays::Any;
  std::vector<DayDate> unavailable_dates;

  // Both, in instance units.
  std::optional<int> break_between;
  std::optional<BreakAfter> break_after;

  bool operator==(const Participant&) const = default;
};

// Unvalidated construction input.

struct RawTask {
  std::string label;
  std::string name;
  Quantity duration;
};

struct RawBreakAfter {
  Quantity max_consecutive;
  Quantity rest;
};

struct RawParticipant {
  std::string label;
  std::string name;
  std::optional<ClockAvailability> clock;
  std::vector<Interval> unavailable_intervals;
  std::optional<WorkingDays> working_days;
  std::vector<DayDate> unavailable_dates;
  std::optional<Quantity> break_between;
  std::optional<RawBreakAfter> break_after;
};

struct RawInstance {
  Category category = Category::Short;
  Instant project_start;
  std::optional<Quantity> horizon;
  std::vector<RawTask> tasks;
  std::vector<RawParticipant> participants;
  DependencyType dependency_type = DependencyType::Fork;
  /// Pairs of task labels; must equal the edges of `dependency_type`.
  std::vector<std::pair<std::string, std::string>> dependencies;
  std::string domain;
  std::string scenario;
  std::optional<std::uint64_t> seed;
};

/// Raised by build_instance; `field` names the offending input.
class ValidationError : public std::runtime_error {
public:
  ValidationError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

private:
  std::string field_;
};

/// A validated two-participant, three-task scheduling problem. Only
/// build_instance constructs one; it is immutable afterwards.
class ProblemInstance {
public:
  Category category() const { return category_; }
  TimeUnit unit() const { return unit_of(category_); }
  Instant project_start() const { return project_start_; }
  DayDate start_date() const { return date_of(project_start_); }
  Minutes horizon() const { return horizon_of(category_); }
  Interval horizon_interval() const { return {project_start_, project_start_ + horizon()}; }
  Minutes slot() const { return slot_length(category_); }
  int slot_count() const { return static_cast<int>(horizon() / slot()); }
  Interval slot_interval(int index) const {
    return {project_start_ + slot() * index, project_start_ + slot() * (index + 1)};
  }

  const std::vector<Task>& tasks() const { return tasks_; }
  const std::vector<Participant>& participants() const { return participants_; }
  const DependencyGraph& dependencies() const { return graph_; }

  const std::string& domain() const { return domain_; }
  const std::string& scenario() const { return scenario_; }
  std::optional<std::uint64_t> seed() const { return seed_; }

  /// Merged GMT working intervals of a short-category participant within the
  /// horizon, before meal breaks and specific unavailability are removed.
  const std::vector<Interval>& working_intervals(std::size_t participant) const { return working_[participant]; }
  /// GMT meal-break intervals within the horizon.
  const std::vector<Interval>& meal_intervals(std::size_t participant) const { return meals_[participant]; }

  /// Bit i set when the participant may work during slot i.
  std::uint32_t availability_mask(std::size_t participant) const { return masks_[participant]; }

  bool operator==(const ProblemInstance&) const = default;

private:
  friend ProblemInstance build_instance(const RawInstance& raw);
  ProblemInstance() = default;

  Category category_ = Category::Short;
  Instant project_start_;
  std::vector<Task> tasks_;
  std::vector<Participant> participants_;
  DependencyGraph graph_;
  std::string domain_;
  std::string scenario_;
  std::optional<std::uint64_t> seed_;

  std::vector<std::vector<Interval>> working_;
  std::vector<std::vector<Interval>> meals_;
  std::vector<std::uint32_t> masks_;
};

/// Validates every field and cross-reference; throws ValidationError naming
/// the first offending field.
ProblemInstance build_instance(const RawInstance& raw);

/// Earliest completion: a GMT instant (short) or a calendar date (long).
using Answer = std::variant<Instant, DayDate>;

/// "2014-12-17 15:00 GMT" or "2014-04-08".
std::string format_answer(const Answer& a);
Answer parse_answer(std::string_view text, Category c);

} // namespace coplan
