#include "coplan/generator.hpp"
#include "coplan/solver.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <chrono>

using namespace coplan;
using namespace coplan::fixtures;

namespace {

std::vector<ProblemInstance> generated(Category c, std::size_t count, std::uint64_t seed) {
  GenerationConfig config = GenerationConfig::defaults(c);
  config.count = count;
  config.seed = seed;
  std::vector<ProblemInstance> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(generate_prototype(config, i).instance);
  return out;
}

RawInstance raw_of(const ProblemInstance& inst) { return parse_metadata(metadata_of(inst)); }

// Later is worse: instants and dates both order chronologically.
bool not_later(const Answer& a, const Answer& b) { return a <= b; }

} // namespace

TEST_CASE("golden instances") {
  SUBCASE("S1") {
    const auto start = std::chrono::steady_clock::now();
    const ProblemInstance s1 = build_instance(s1_raw());
    const Solution sol = solve_optimal(s1);
    const auto elapsed = std::chrono::steady_clock::now() - start;
    CHECK(format_answer(sol.answer) == "2014-12-17 15:00 GMT");
    CHECK(validate_schedule(s1, sol.witness).empty());
    CHECK(elapsed < std::chrono::seconds(1));
    CHECK(brute_force_oracle(s1) == sol.answer);
  }
  SUBCASE("S2") {
    const ProblemInstance s2 = build_instance(s2_raw());
    const Solution sol = solve_optimal(s2);
    CHECK(format_answer(sol.answer) == "2024-05-14 14:00 GMT");
    CHECK(validate_schedule(s2, sol.witness).empty());
    CHECK(brute_force_oracle(s2) == sol.answer);
  }
  SUBCASE("L1") {
    const ProblemInstance l1 = build_instance(l1_raw());
    const Solution sol = solve_optimal(l1);
    CHECK(format_answer(sol.answer) == "2021-09-14");
    CHECK(validate_schedule(l1, sol.witness).empty());
    CHECK(brute_force_oracle(l1) == sol.answer);
  }
}

TEST_CASE("the S1 witness is the lexicographically first optimum") {
  const ProblemInstance s1 = build_instance(s1_raw());
  const Schedule w = solve_optimal(s1).witness;
  REQUIRE(w.entries.size() == 3);
  CHECK(w.entries[0].participant == 0);
  CHECK(format_instant(w.entries[0].span.begin) == "2014-12-17 01:00 GMT");
  CHECK(w.entries[1].participant == 0);
  CHECK(format_instant(w.entries[1].span.begin) == "2014-12-17 06:00 GMT");
  CHECK(w.entries[2].participant == 1);
  CHECK(format_instant(w.entries[2].span.begin) == "2014-12-17 14:00 GMT");
}

TEST_CASE("trivial and infeasible instances") {
  SUBCASE("unconstrained participants finish a 1 h chain in 3 h") {
    RawInstance raw = s1_raw();
    raw.tasks = hour_tasks(1, 1, 1);
    raw.dependency_type = DependencyType::Chain;
    raw.dependencies = edges_of(DependencyType::Chain);
    for (auto& p : raw.participants) {
      p.clock->zone_label = "UTC";
      p.clock->zone = ZoneOffset{0};
      p.clock->working = ClockWindow(0, kMinutesPerDay);
      p.clock->meal.reset();
      p.break_between.reset();
    }
    const Solution sol = solve_optimal(build_instance(raw));
    CHECK(format_answer(sol.answer) == "2014-12-17 03:00 GMT");
  }
  SUBCASE("a task longer than every availability block") {
    RawInstance raw = s1_raw();
    raw.tasks = hour_tasks(5, 1, 1);
    const ProblemInstance inst = build_instance(raw);
    CHECK_THROWS_AS(solve_optimal(inst), InfeasibleError);
    CHECK_THROWS_AS(brute_force_oracle(inst), InfeasibleError);
  }
}

TEST_CASE("solver equals the oracle on generated instances") {
  for (Category c : {Category::Short, Category::Long}) {
    for (const auto& inst : generated(c, 45, 99)) {
      const Solution sol = solve_optimal(inst);
      CHECK(validate_schedule(inst, sol.witness).empty());
      CHECK(completion(inst, sol.witness) == sol.answer);
      CHECK(brute_force_oracle(inst) == sol.answer);
    }
  }
}

TEST_CASE("relaxing constraints never delays completion") {
  for (Category c : {Category::Short, Category::Long}) {
    for (const auto& inst : generated(c, 30, 5)) {
      const Answer base = solve_optimal(inst).answer;

      RawInstance no_breaks = raw_of(inst);
      for (auto& p : no_breaks.participants) {
        p.break_between.reset();
        p.break_after.reset();
      }
      CHECK(not_later(solve_optimal(build_instance(no_breaks)).answer, base));

      RawInstance open = raw_of(inst);
      for (auto& p : open.participants) {
        if (p.clock) {
          p.clock->meal.reset();
          p.clock->working = ClockWindow(0, kMinutesPerDay);
        } else {
          p.working_days = WorkingDays::Any;
          p.unavailable_dates.clear();
        }
      }
      CHECK(not_later(solve_optimal(build_instance(open)).answer, base));
    }
  }
}

TEST_CASE("solving is deterministic") {
  for (const auto& inst : generated(Category::Short, 15, 3)) {
    const Solution a = solve_optimal(inst);
    const Solution b = solve_optimal(build_instance(raw_of(inst)));
    CHECK(a.answer == b.answer);
    CHECK(a.witness == b.witness);
  }
}

TEST_CASE("re-expressing availability in another zone leaves the answer unchanged") {
  const auto insts = generated(Category::Short, 30, 11);
  for (const auto& inst : insts) {
    const Answer base = solve_optimal(inst).answer;
    for (int shift : {-3, 2, 5}) {
      RawInstance raw = raw_of(inst);
      bool valid = true;
      for (auto& p : raw.participants) {
        const int z = p.clock->zone.hours() + shift;
        if (z < ZoneOffset::kMinHours || z > ZoneOffset::kMaxHours) {
          valid = false;
          break;
        }
        auto moved = [&](const ClockWindow& w) {
          auto wrap = [](int m) { return ((m % kMinutesPerDay) + kMinutesPerDay) % kMinutesPerDay; };
          return ClockWindow(wrap(w.start() + shift * kMinutesPerHour), wrap(w.end() + shift * kMinutesPerHour));
        };
        p.clock->zone = ZoneOffset{z};
        p.clock->zone_label = "X";
        p.clock->working = moved(p.clock->working);
        if (p.clock->meal) p.clock->meal = moved(*p.clock->meal);
      }
      if (!valid) continue;
      const ProblemInstance moved = build_instance(raw);
      for (std::size_t i = 0; i < kParticipantCount; ++i)
        CHECK(moved.availability_mask(i) == inst.availability_mask(i));
      CHECK(solve_optimal(moved).answer == base);
    }
  }
}
