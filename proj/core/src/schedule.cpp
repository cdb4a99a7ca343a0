#include "coplan/schedule.hpp"

#include <algorithm>
#include <sstream>

namespace coplan {

std::string_view to_string(ViolationKind k) {
  switch (k) {
  case ViolationKind::ProjectStart:
    return "project-start";
  case ViolationKind::Dependency:
    return "dependency";
  case ViolationKind::Availability:
    return "availability";
  case ViolationKind::MealBreak:
    return "meal-break overlap";
  case ViolationKind::Unavailability:
    return "unavailability";
  case ViolationKind::Overlap:
    return "overlap";
  case ViolationKind::BreakBetween:
    return "break-between";
  case ViolationKind::BreakAfter:
    return "break-after";
  case ViolationKind::Horizon:
    return "horizon";
  }
  return "unknown";
}

namespace {

// Slot indices (relative to the project start) an entry occupies, ascending.
struct Placement {
  const ScheduleEntry* entry = nullptr;
  std::vector<int> slots;

  int first() const { return slots.front(); }
  int last() const { return slots.back(); }
};

std::vector<Placement> place(const ProblemInstance& inst, const Schedule& schedule) {
  const auto& tasks = inst.tasks();
  if (schedule.entries.size() != tasks.size()) throw ScheduleError("schedule must have exactly one entry per task");
  std::vector<Placement> out(tasks.size());
  std::vector<bool> seen(tasks.size(), false);
  for (const auto& e : schedule.entries) {
    if (e.task >= tasks.size()) throw ScheduleError("unknown task index " + std::to_string(e.task));
    if (e.participant >= inst.participants().size())
      throw ScheduleError("unknown participant index " + std::to_string(e.participant));
    if (seen[e.task]) throw ScheduleError("task " + tasks[e.task].label + " scheduled twice");
    seen[e.task] = true;
    const int duration = tasks[e.task].duration;
    Placement p{&e, {}};
    if (inst.category() == Category::Short) {
      const auto offset = (e.span.begin - inst.project_start()).count();
      if (offset % kMinutesPerHour != 0) throw ScheduleError(tasks[e.task].label + " does not start on the hour");
      if (e.span.length() != Minutes{duration * kMinutesPerHour})
        throw ScheduleError(tasks[e.task].label + " span disagrees with its duration");
      const int first = static_cast<int>(offset / kMinutesPerHour);
      for (int i = 0; i < duration; ++i) p.slots.push_back(first + i);
    } else {
      if (static_cast<int>(e.days.size()) != duration)
        throw ScheduleError(tasks[e.task].label + " day count disagrees with its duration");
      for (std::size_t i = 0; i < e.days.size(); ++i) {
        if (i > 0 && e.days[i] <= e.days[i - 1])
          throw ScheduleError(tasks[e.task].label + " days must be strictly increasing");
        p.slots.push_back(static_cast<int>((e.days[i] - inst.start_date()).count()));
      }
    }
    out[e.task] = std::move(p);
  }
  return out;
}

std::string slot_text(const ProblemInstance& inst, int slot) {
  if (inst.category() == Category::Short) return format_instant(inst.project_start() + Minutes{slot * kMinutesPerHour});
  return format_date(inst.start_date() + Days{slot});
}

// Maximal runs of consecutive slots as [first, last] pairs.
std::vector<std::pair<int, int>> runs_of(std::vector<int> slots) {
  std::sort(slots.begin(), slots.end());
  std::vector<std::pair<int, int>> runs;
  for (int s : slots) {
    if (!runs.empty() && runs.back().second + 1 == s)
      runs.back().second = s;
    else if (runs.empty() || runs.back().second != s)
      runs.emplace_back(s, s);
  }
  return runs;
}

} // namespace

Answer completion(const ProblemInstance& instance, const Schedule& schedule) {
  if (schedule.entries.empty()) throw ScheduleError("empty schedule");
  if (instance.category() == Category::Short) {
    Instant end = schedule.entries.front().span.end;
    for (const auto& e : schedule.entries) end = std::max(end, e.span.end);
    return end;
  }
  DayDate last = schedule.entries.front().days.back();
  for (const auto& e : schedule.entries) last = std::max(last, e.days.back());
  return last;
}

namespace {

// Runs every check in order, handing violations to `sink`. The detail text is
// produced lazily; a sink returning false stops the scan.
template <typename Sink>
void check_schedule(const ProblemInstance& inst, const Schedule& schedule, Sink&& sink) {
  const auto placements = place(inst, schedule);
  const auto& tasks = inst.tasks();
  const auto& people = inst.participants();
  const bool is_short = inst.category() == Category::Short;
  const std::string unit = is_short ? "h" : "d";
  bool stop = false;
  auto report = [&](ViolationKind kind, const Placement& p, auto&& detail) {
    if (!stop && !sink(kind, p, detail)) stop = true;
  };

  // (1) project start
  for (const auto& p : placements)
    if (p.first() < 0)
      report(ViolationKind::ProjectStart, p, [&] {
        return std::string(tasks[p.entry->task].label + " starts at " + slot_text(inst, p.first()) +
                           ", before the project start");
      });

  if (stop) return;
  // (2) finish-before-start dependencies
  for (const auto& e : inst.dependencies().edges()) {
    const auto& pred = placements[e.before];
    const auto& succ = placements[e.after];
    if (succ.first() < pred.last() + 1)
      report(ViolationKind::Dependency, succ, [&] {
        return std::string(tasks[e.after].label + " starts before " + tasks[e.before].label + " finishes");
      });
  }

  if (stop) return;
  // (3) general availability and specific unavailability
  for (const auto& p : placements) {
    const auto& who = people[p.entry->participant];
    const std::string& label = tasks[p.entry->task].label;
    if (is_short) {
      const Interval span = p.entry->span;
      const auto& working = inst.working_intervals(p.entry->participant);
      if (std::none_of(working.begin(), working.end(), [&](const Interval& w) { return w.contains(span); }))
        report(ViolationKind::Availability, p,
               [&] { return std::string(label + " lies outside " + who.name + "'s working hours"); });
      const auto& meals = inst.meal_intervals(p.entry->participant);
      if (std::any_of(meals.begin(), meals.end(), [&](const Interval& m) { return m.overlaps(span); }))
        report(ViolationKind::MealBreak, p,
               [&] { return std::string(label + " overlaps " + who.name + "'s meal break"); });
      if (std::any_of(who.unavailable_intervals.begin(), who.unavailable_intervals.end(),
                      [&](const Interval& u) { return u.overlaps(span); }))
        report(ViolationKind::Unavailability, p,
               [&] { return std::string(label + " overlaps " + who.name + "'s unavailability"); });
    } else {
      for (const auto d : p.entry->days) {
        if (who.working_days == WorkingDays::Weekdays && is_weekend(d))
          report(ViolationKind::Availability, p,
                 [&] { return std::string(who.name + " does not work on " + format_date(d)); });
        if (std::find(who.unavailable_dates.begin(), who.unavailable_dates.end(), d) != who.unavailable_dates.end())
          report(ViolationKind::Unavailability, p,
                 [&] { return std::string(who.name + " is unavailable on " + format_date(d)); });
      }
    }
  }

  // Per-participant placements in start order.
  std::vector<std::vector<const Placement*>> by_person(people.size());
  for (const auto& p : placements) by_person[p.entry->participant].push_back(&p);
  for (auto& list : by_person)
    std::sort(list.begin(), list.end(), [](const Placement* a, const Placement* b) {
      return std::pair(a->first(), a->entry->task) < std::pair(b->first(), b->entry->task);
    });

  if (stop) return;
  // (4) one task at a time
  for (const auto& list : by_person)
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        const auto& a = list[i]->slots;
        const auto& b = list[j]->slots;
        if (std::any_of(a.begin(), a.end(), [&](int s) { return std::find(b.begin(), b.end(), s) != b.end(); }))
          report(ViolationKind::Overlap, *list[j], [&] {
            return std::string(tasks[list[i]->entry->task].label + " and " + tasks[list[j]->entry->task].label +
                               " share a slot of " + people[list[j]->entry->participant].name);
          });
      }

  if (stop) return;
  // (5) break between consecutive tasks, wall clock
  for (std::size_t who = 0; who < people.size(); ++who) {
    if (!people[who].break_between) continue;
    const int need = *people[who].break_between;
    const auto& list = by_person[who];
    for (std::size_t i = 1; i < list.size(); ++i) {
      const int gap = list[i]->first() - list[i - 1]->last() - 1;
      if (gap < need)
        report(ViolationKind::BreakBetween, *list[i], [&] {
          return std::string(people[who].name + " rests " + std::to_string(gap) + unit + " between " +
                             tasks[list[i - 1]->entry->task].label + " and " + tasks[list[i]->entry->task].label +
                             ", needs " + std::to_string(need) + unit);
        });
    }
  }

  if (stop) return;
  // (6) break after K consecutive worked slots
  for (std::size_t who = 0; who < people.size(); ++who) {
    if (!people[who].break_after || by_person[who].empty()) continue;
    const auto [cap, rest] = *people[who].break_after;
    std::vector<int> worked;
    for (const auto* p : by_person[who]) worked.insert(worked.end(), p->slots.begin(), p->slots.end());
    const auto runs = runs_of(worked);
    const Placement& culprit = *by_person[who].front();
    for (std::size_t i = 0; i < runs.size(); ++i) {
      const int length = runs[i].second - runs[i].first + 1;
      if (length > cap)
        report(ViolationKind::BreakAfter, culprit, [&] {
          return std::string(people[who].name + " works " + std::to_string(length) + unit + " in a row from " +
                             slot_text(inst, runs[i].first) + ", cap is " + std::to_string(cap) + unit);
        });
      if (i + 1 < runs.size()) {
        const int gap = runs[i + 1].first - runs[i].second - 1;
        if (gap < rest)
          report(ViolationKind::BreakAfter, culprit, [&] {
            return std::string(people[who].name + " rests only " + std::to_string(gap) + unit +
                               " after working until " + slot_text(inst, runs[i].second) + ", needs " +
                               std::to_string(rest) + unit);
          });
      }
    }
  }

  if (stop) return;
  // (7) completion within the horizon
  for (const auto& p : placements)
    if (p.last() >= inst.slot_count())
      report(ViolationKind::Horizon, p,
             [&] { return std::string(tasks[p.entry->task].label + " runs past the horizon"); });
}

} // namespace

std::vector<Violation> validate_schedule(const ProblemInstance& inst, const Schedule& schedule) {
  std::vector<Violation> out;
  check_schedule(inst, schedule, [&](ViolationKind kind, const Placement& p, auto&& detail) {
    out.push_back({kind, p.entry->task, p.entry->participant, detail()});
    return true;
  });
  return out;
}

bool is_feasible(const ProblemInstance& inst, const Schedule& schedule) {
  bool ok = true;
  check_schedule(inst, schedule, [&](ViolationKind, const Placement&, auto&&) { return ok = false; });
  return ok;
}

std::string describe(const ProblemInstance& inst, const Schedule& schedule) {
  std::ostringstream os;
  for (const auto& e : schedule.entries) {
    os << inst.tasks()[e.task].label << ": " << inst.participants()[e.participant].name << ' ';
    if (inst.category() == Category::Short) {
      os << format_instant(e.span.begin) << " - " << format_instant(e.span.end);
    } else {
      for (std::size_t i = 0; i < e.days.size(); ++i) os << (i ? ", " : "") << format_date(e.days[i]);
    }
    os << '\n';
  }
  return os.str();
}

} // namespace coplan
