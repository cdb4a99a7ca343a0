#include "coplan/metadata.hpp"

#include "fixtures.hpp"

#include <doctest.h>

using namespace coplan;
using namespace coplan::fixtures;

namespace {

std::string failing_field(const RawInstance& raw) {
  try {
    build_instance(raw);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

} // namespace

TEST_CASE("build_instance accepts the worked instances") {
  const ProblemInstance s1 = build_instance(s1_raw());
  CHECK(s1.category() == Category::Short);
  CHECK(s1.slot_count() == 24);
  CHECK(s1.tasks().size() == kTaskCount);
  CHECK(s1.participants().size() == kParticipantCount);
  CHECK(s1.dependencies().edges() == topology_edges(DependencyType::Fork));

  // AEST 11-19 is 01-09 GMT with the meal at 05-06 GMT.
  const std::uint32_t agent1 = s1.availability_mask(0);
  for (int h = 0; h < 24; ++h) CHECK(((agent1 >> h) & 1u) == ((h >= 1 && h < 9 && h != 5) ? 1u : 0u));

  const ProblemInstance l1 = build_instance(l1_raw());
  CHECK(l1.slot_count() == 7);
  // Olivia: weekdays only and off on Monday the 13th; the 11th is a Saturday.
  CHECK(l1.availability_mask(1) == 0b1111000u);
  CHECK(l1.availability_mask(0) == 0b1111111u);
}

TEST_CASE("build_instance rejects bad input with the offending field") {
  SUBCASE("task count") {
    RawInstance raw = s1_raw();
    raw.tasks.push_back({"Task D", "Task D", {1, TimeUnit::Hour}});
    CHECK(failing_field(raw).find("task count") != std::string::npos);
  }
  SUBCASE("participant count") {
    RawInstance raw = s1_raw();
    raw.participants.pop_back();
    CHECK(failing_field(raw).find("participant count") != std::string::npos);
  }
  SUBCASE("unit mismatch") {
    RawInstance raw = s1_raw();
    raw.tasks[0].duration = {2, TimeUnit::Day};
    CHECK(failing_field(raw).find("unit mismatch") != std::string::npos);
  }
  SUBCASE("meal break outside the working window") {
    RawInstance raw = s1_raw();
    raw.participants[0].clock->meal = ClockWindow::hours(20, 21);
    CHECK(failing_field(raw).find("meal break outside working window") != std::string::npos);
  }
  SUBCASE("unknown task id") {
    RawInstance raw = s1_raw();
    raw.dependencies[0].second = "Task Z";
    CHECK(failing_field(raw).find("unknown task id") != std::string::npos);
  }
  SUBCASE("edges disagree with the topology tag") {
    RawInstance raw = s1_raw();
    raw.dependency_type = DependencyType::Chain;
    CHECK(failing_field(raw).find("edges do not match") != std::string::npos);
  }
  SUBCASE("zero duration") {
    RawInstance raw = s1_raw();
    raw.tasks[1].duration = {0, TimeUnit::Hour};
    CHECK(failing_field(raw).find("tasks") != std::string::npos);
  }
  SUBCASE("break-after needs K >= 1 and R >= 1") {
    RawInstance raw = l1_raw();
    raw.participants[0].break_after->rest = {0, TimeUnit::Day};
    CHECK_FALSE(failing_field(raw).empty());
  }
  SUBCASE("unavailable date outside the horizon") {
    RawInstance raw = l1_raw();
    raw.participants[1].unavailable_dates = {parse_date("2021-09-30")};
    CHECK(failing_field(raw).find("outside the horizon") != std::string::npos);
  }
  SUBCASE("short project must start on the hour") {
    RawInstance raw = s1_raw();
    raw.project_start += Minutes{30};
    CHECK(failing_field(raw).find("project_start") != std::string::npos);
  }
  SUBCASE("day rules belong to the long category") {
    RawInstance raw = s1_raw();
    raw.participants[0].working_days = WorkingDays::Weekdays;
    CHECK(failing_field(raw).find("unit mismatch") != std::string::npos);
  }
}

TEST_CASE("topology tags") {
  for (auto t : kDependencyTypes) {
    const DependencyGraph g(t);
    CHECK(g.edges().size() == 2);
    for (const auto& e : g.edges()) CHECK(e.before < e.after); // acyclic by index order
    CHECK(parse_dependency_type(to_string(t)) == t);
  }
  CHECK(DependencyGraph(DependencyType::Join).predecessors(2) == std::vector<std::size_t>{0, 1});
  CHECK(DependencyGraph(DependencyType::Chain).predecessors(0).empty());
}

TEST_CASE("metadata of the worked instances") {
  const Metadata s1 = metadata_of(build_instance(s1_raw()));
  CHECK(s1["dependencies"] == nlohmann::ordered_json::parse(R"([["Task A","Task B"],["Task A","Task C"]])"));
  CHECK(s1["project_start"] == "2014-12-17 00:00 GMT");
  CHECK(s1["agent_constraints"]["Agent1"]["timezone"] == "AEST");
  CHECK(s1["agent_constraints"]["Agent1"]["utc_offset"] == 10);
  CHECK(s1["agent_constraints_gmt"]["Agent1"]["working_hours"] ==
        nlohmann::ordered_json::parse(R"([["01:00","09:00"]])"));

  const Metadata l1 = metadata_of(build_instance(l1_raw()));
  CHECK(l1["agent_unavailable_dates"]["Olivia"] == nlohmann::ordered_json::parse(R"(["2021-09-13"])"));
  CHECK(l1["task_name_map"]["Specify Spring & Damping Fluid"] == "Task C");
  CHECK(l1["agent_name_map"]["Liam"] == "Agent1");
  CHECK(l1["scenario"] == "RC monster truck shock absorber");
}

TEST_CASE("metadata round trip is lossless") {
  for (const RawInstance& raw : {s1_raw(), s2_raw(), l1_raw()}) {
    const ProblemInstance original = build_instance(raw);
    const Metadata doc = metadata_of(original);
    const ProblemInstance back = instance_from_metadata(nlohmann::ordered_json::parse(doc.dump()));
    CHECK(back.tasks() == original.tasks());
    CHECK(back.participants() == original.participants());
    CHECK(back.dependencies() == original.dependencies());
    CHECK(back.project_start() == original.project_start());
    CHECK(metadata_of(back) == doc);
  }
}

TEST_CASE("metadata schema errors are structural") {
  Metadata doc = metadata_of(build_instance(s1_raw()));
  SUBCASE("missing key") {
    doc.erase("tasks");
    CHECK_THROWS_AS(parse_metadata(doc), SchemaError);
  }
  SUBCASE("wrong type") {
    doc["tasks"][0]["duration"]["hours"] = "two";
    CHECK_THROWS_AS(parse_metadata(doc), SchemaError);
  }
  SUBCASE("malformed clock") {
    doc["agent_constraints"]["Agent1"]["working_hours"][0] = "11h";
    CHECK_THROWS_AS(parse_metadata(doc), SchemaError);
  }
  SUBCASE("name missing from the map") {
    doc["task_name_map"].erase("Task B");
    CHECK_THROWS_AS(parse_metadata(doc), SchemaError);
  }
  SUBCASE("inconsistent GMT block is a content error") {
    doc["agent_constraints_gmt"]["Agent1"]["working_hours"][0][0] = "02:00";
    CHECK_THROWS_AS(instance_from_metadata(doc), ValidationError);
  }
  SUBCASE("inconsistent dependency graph is a content error") {
    doc["dependency_graph"]["Task C"] = nlohmann::ordered_json::array({"Task B"});
    CHECK_THROWS_AS(instance_from_metadata(doc), ValidationError);
  }
}

TEST_CASE("answers format and parse") {
  const Answer a = parse_answer("2014-12-17 15:00 GMT", Category::Short);
  CHECK(format_answer(a) == "2014-12-17 15:00 GMT");
  const Answer d = parse_answer("2021-09-14", Category::Long);
  CHECK(format_answer(d) == "2021-09-14");
  CHECK_THROWS_AS(parse_answer("Sept 14", Category::Long), ParseError);
}
