#include "coplan/model.hpp"

#include <algorithm>
#include <set>

namespace coplan {

std::string_view to_string(DependencyType t) {
  switch (t) {
  case DependencyType::Fork:
    return "fork";
  case DependencyType::Chain:
    return "chain";
  case DependencyType::Join:
    return "join";
  }
  return "fork";
}

DependencyType parse_dependency_type(std::string_view text) {
  for (auto t : kDependencyTypes)
    if (to_string(t) == text) return t;
  throw ParseError("unknown dependency type '" + std::string(text) + "'");
}

TimeUnit unit_of(Category c) { return c == Category::Short ? TimeUnit::Hour : TimeUnit::Day; }

std::string_view to_string(TimeUnit u) { return u == TimeUnit::Hour ? "hours" : "days"; }

std::string_view to_string(WorkingDays w) { return w == WorkingDays::Any ? "any" : "weekdays"; }

WorkingDays parse_working_days(std::string_view text) {
  if (text == "any") return WorkingDays::Any;
  if (text == "weekdays") return WorkingDays::Weekdays;
  throw ParseError("unknown working-day rule '" + std::string(text) + "'");
}

std::vector<Edge> topology_edges(DependencyType t) {
  switch (t) {
  case DependencyType::Fork:
    return {{0, 1}, {0, 2}};
  case DependencyType::Chain:
    return {{0, 1}, {1, 2}};
  case DependencyType::Join:
    return {{0, 2}, {1, 2}};
  }
  return {};
}

std::vector<std::size_t> DependencyGraph::predecessors(std::size_t task) const {
  std::vector<std::size_t> out;
  for (const auto& e : edges_)
    if (e.after == task) out.push_back(e.before);
  return out;
}

namespace {

int checked_quantity(const Quantity& q, TimeUnit unit, const std::string& field, int minimum) {
  if (q.unit != unit)
    throw ValidationError(field, std::string("unit mismatch: expected ") + std::string(to_string(unit)) + ", got " +
                                     std::string(to_string(q.unit)));
  if (q.value < minimum) throw ValidationError(field, "must be at least " + std::to_string(minimum));
  return q.value;
}

bool overlaps_any(const Interval& slot, const std::vector<Interval>& intervals) {
  return std::any_of(intervals.begin(), intervals.end(), [&](const Interval& iv) { return iv.overlaps(slot); });
}

bool inside_one(const Interval& slot, const std::vector<Interval>& intervals) {
  return std::any_of(intervals.begin(), intervals.end(), [&](const Interval& iv) { return iv.contains(slot); });
}

} // namespace

ProblemInstance build_instance(const RawInstance& raw) {
  ProblemInstance inst;
  inst.category_ = raw.category;
  inst.project_start_ = raw.project_start;
  inst.domain_ = raw.domain;
  inst.scenario_ = raw.scenario;
  inst.seed_ = raw.seed;
  const TimeUnit unit = unit_of(raw.category);
  const int horizon_value = raw.category == Category::Short ? 24 : 7;

  if (raw.horizon) {
    const int h = checked_quantity(*raw.horizon, unit, "horizon", 1);
    if (h != horizon_value)
      throw ValidationError("horizon", "must be " + std::to_string(horizon_value) + " " + std::string(to_string(unit)));
  }
  const int start_minute = minute_of_day(raw.project_start);
  if (raw.category == Category::Short && start_minute % kMinutesPerHour != 0)
    throw ValidationError("project_start", "short projects start on the hour");
  if (raw.category == Category::Long && start_minute != 0)
    throw ValidationError("project_start", "long projects start at 00:00 GMT");

  if (raw.tasks.size() != kTaskCount)
    throw ValidationError("tasks", "task count must be " + std::to_string(kTaskCount) + ", got " +
                                       std::to_string(raw.tasks.size()));
  if (raw.participants.size() != kParticipantCount)
    throw ValidationError("participants", "participant count must be " + std::to_string(kParticipantCount) + ", got " +
                                              std::to_string(raw.participants.size()));

  std::set<std::string> labels;
  std::set<std::string> names;
  for (const auto& t : raw.tasks) {
    const std::string field = "tasks[" + t.label + "]";
    if (t.label.empty()) throw ValidationError("tasks", "task label must not be empty");
    if (!labels.insert(t.label).second) throw ValidationError(field, "duplicate task label");
    if (!names.insert(t.name).second) throw ValidationError(field + ".name", "duplicate task name");
    const int d = checked_quantity(t.duration, unit, field + ".duration", 1);
    if (d > horizon_value) throw ValidationError(field + ".duration", "longer than the horizon");
    inst.tasks_.push_back({t.label, t.name, d});
  }

  const Interval horizon = inst.horizon_interval();
  labels.clear();
  names.clear();
  for (const auto& p : raw.participants) {
    const std::string field = "participants[" + p.label + "]";
    if (p.label.empty()) throw ValidationError("participants", "participant label must not be empty");
    if (!labels.insert(p.label).second) throw ValidationError(field, "duplicate participant label");
    if (!names.insert(p.name).second) throw ValidationError(field + ".name", "duplicate participant name");

    Participant out;
    out.label = p.label;
    out.name = p.name;
    if (raw.category == Category::Short) {
      if (!p.clock) throw ValidationError(field + ".working_hours", "short participants need working hours");
      if (p.working_days) throw ValidationError(field + ".working_days", "unit mismatch: day rules are long-only");
      if (!p.unavailable_dates.empty())
        throw ValidationError(field + ".unavailable_dates", "unit mismatch: dated unavailability is long-only");
      if (p.clock->meal && !p.clock->working.covers(*p.clock->meal))
        throw ValidationError(field + ".meal_break", "meal break outside working window");
      for (const auto& iv : p.unavailable_intervals) {
        if (iv.end <= iv.begin) throw ValidationError(field + ".unavailable", "empty interval");
        if (!horizon.contains(iv)) throw ValidationError(field + ".unavailable", "interval outside the horizon");
      }
      out.clock = p.clock;
      out.unavailable_intervals = merge_intervals(p.unavailable_intervals);
    } else {
      if (p.clock) throw ValidationError(field + ".working_hours", "unit mismatch: clock windows are short-only");
      if (!p.unavailable_intervals.empty())
        throw ValidationError(field + ".unavailable", "unit mismatch: clock unavailability is short-only");
      out.working_days = p.working_days.value_or(WorkingDays::Any);
      std::set<DayDate> dates;
      for (const auto d : p.unavailable_dates) {
        if (d < inst.start_date() || d >= inst.start_date() + Days{7})
          throw ValidationError(field + ".unavailable_dates", format_date(d) + " lies outside the horizon");
        dates.insert(d);
      }
      out.unavailable_dates.assign(dates.begin(), dates.end());
    }
    if (p.break_between) out.break_between = checked_quantity(*p.break_between, unit, field + ".break_between", 1);
    if (p.break_after) {
      out.break_after =
          BreakAfter{checked_quantity(p.break_after->max_consecutive, unit, field + ".break_after.max_consecutive", 1),
                     checked_quantity(p.break_after->rest, unit, field + ".break_after.rest", 1)};
    }
    inst.participants_.push_back(std::move(out));
  }

  std::vector<Edge> edges;
  for (const auto& [before, after] : raw.dependencies) {
    auto index_of = [&](const std::string& label) -> std::size_t {
      for (std::size_t i = 0; i < inst.tasks_.size(); ++i)
        if (inst.tasks_[i].label == label) return i;
      throw ValidationError("dependencies", "unknown task id '" + label + "'");
    };
    edges.push_back({index_of(before), index_of(after)});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (edges != topology_edges(raw.dependency_type))
    throw ValidationError("dependencies",
                          "edges do not match the '" + std::string(to_string(raw.dependency_type)) + "' topology");
  inst.graph_ = DependencyGraph(raw.dependency_type);

  for (const auto& p : inst.participants_) {
    std::uint32_t mask = 0;
    std::vector<Interval> working, meals;
    if (inst.category_ == Category::Short) {
      working = recurring_gmt_intervals(p.clock->working, p.clock->zone, horizon);
      if (p.clock->meal) meals = recurring_gmt_intervals(*p.clock->meal, p.clock->zone, horizon);
      for (int i = 0; i < inst.slot_count(); ++i) {
        const Interval slot = inst.slot_interval(i);
        if (inside_one(slot, working) && !overlaps_any(slot, meals) && !overlaps_any(slot, p.unavailable_intervals))
          mask |= 1u << i;
      }
    } else {
      for (int i = 0; i < inst.slot_count(); ++i) {
        const DayDate d = inst.start_date() + Days{i};
        if (p.working_days == WorkingDays::Weekdays && is_weekend(d)) continue;
        if (std::binary_search(p.unavailable_dates.begin(), p.unavailable_dates.end(), d)) continue;
        mask |= 1u << i;
      }
    }
    inst.working_.push_back(std::move(working));
    inst.meals_.push_back(std::move(meals));
    inst.masks_.push_back(mask);
  }
  return inst;
}

std::string format_answer(const Answer& a) {
  if (const auto* t = std::get_if<Instant>(&a)) return format_instant(*t);
  return format_date(std::get<DayDate>(a));
}

Answer parse_answer(std::string_view text, Category c) {
  if (c == Category::Short) return parse_instant(text);
  return parse_date(text);
}

} // namespace coplan
