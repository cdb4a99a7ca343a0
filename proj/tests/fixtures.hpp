#pragma once

// Worked instances with known answers.
//  S1: short prototype, fork; Agent1 AEST 11-19 (meal 15-16, 3h between
//      tasks), Agent2 EST 9-17 (meal 13-15, 3h between). Answer 15:00 GMT.
//  S2: short, fork; Sarah CET 10-18 (lunch 15-16, 1h between), Mark UTC 8-16
//      (lunch 11-12, 1h between). Answer 14:00 GMT the same day.
//  L1: long, fork, kickoff Saturday 2021-09-11; Liam any day with a 1-day rest
//      after 2 consecutive days, Olivia weekdays only with a 1-day break
//      between tasks and off Monday 2021-09-13. Answer 2021-09-14.

#include "coplan/model.hpp"
#include "coplan/zones.hpp"

namespace coplan::fixtures {

inline RawParticipant clock_participant(std::string label, std::string name, std::string zone, int work_from,
                                        int work_to, int meal_from, int meal_to, std::optional<int> break_between) {
  RawParticipant p;
  p.label = std::move(label);
  p.name = std::move(name);
  p.clock = ClockAvailability{zone, ZoneTable::builtin().at(zone), ClockWindow::hours(work_from, work_to),
                              ClockWindow::hours(meal_from, meal_to)};
  if (break_between) p.break_between = Quantity{*break_between, TimeUnit::Hour};
  return p;
}

inline std::vector<RawTask> hour_tasks(int a, int b, int c) {
  return {{"Task A", "Task A", {a, TimeUnit::Hour}},
          {"Task B", "Task B", {b, TimeUnit::Hour}},
          {"Task C", "Task C", {c, TimeUnit::Hour}}};
}

inline std::vector<std::pair<std::string, std::string>> edges_of(DependencyType t) {
  static const char* names[] = {"Task A", "Task B", "Task C"};
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : topology_edges(t)) out.emplace_back(names[e.before], names[e.after]);
  return out;
}

inline RawInstance s1_raw() {
  RawInstance r;
  r.category = Category::Short;
  r.project_start = parse_instant("2014-12-17 00:00 GMT");
  r.horizon = Quantity{24, TimeUnit::Hour};
  r.tasks = hour_tasks(2, 1, 1);
  r.participants = {clock_participant("Agent1", "Agent1", "AEST", 11, 19, 15, 16, 3),
                    clock_participant("Agent2", "Agent2", "EST", 9, 17, 13, 15, 3)};
  r.dependency_type = DependencyType::Fork;
  r.dependencies = edges_of(DependencyType::Fork);
  r.domain = "Communications/Media Studies";
  return r;
}

inline RawInstance s2_raw() {
  RawInstance r;
  r.category = Category::Short;
  r.project_start = parse_instant("2024-05-14 00:00 GMT");
  r.horizon = Quantity{24, TimeUnit::Hour};
  r.tasks = hour_tasks(1, 2, 3);
  r.participants = {clock_participant("Agent1", "Sarah", "CET", 10, 18, 15, 16, 1),
                    clock_participant("Agent2", "Mark", "UTC", 8, 16, 11, 12, 1)};
  r.dependency_type = DependencyType::Fork;
  r.dependencies = edges_of(DependencyType::Fork);
  r.domain = "Business Administration";
  return r;
}

inline RawInstance l1_raw() {
  RawInstance r;
  r.category = Category::Long;
  r.project_start = start_of(parse_date("2021-09-11"));
  r.horizon = Quantity{7, TimeUnit::Day};
  r.tasks = {{"Task A", "Define Load & Damping for RC Truck", {1, TimeUnit::Day}},
             {"Task B", "Sketch Piston-Cylinder Assembly", {1, TimeUnit::Day}},
             {"Task C", "Specify Spring & Damping Fluid", {2, TimeUnit::Day}}};
  RawParticipant liam;
  liam.label = "Agent1";
  liam.name = "Liam";
  liam.working_days = WorkingDays::Any;
  liam.break_after = RawBreakAfter{{2, TimeUnit::Day}, {1, TimeUnit::Day}};
  RawParticipant olivia;
  olivia.label = "Agent2";
  olivia.name = "Olivia";
  olivia.working_days = WorkingDays::Weekdays;
  olivia.break_between = Quantity{1, TimeUnit::Day};
  olivia.unavailable_dates = {parse_date("2021-09-13")};
  r.participants = {liam, olivia};
  r.dependency_type = DependencyType::Fork;
  r.dependencies = edges_of(DependencyType::Fork);
  r.domain = "Mechanical Engineering";
  r.scenario = "RC monster truck shock absorber";
  return r;
}

} // namespace coplan::fixtures
