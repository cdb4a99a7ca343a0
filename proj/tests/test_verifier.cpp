#include "coplan/verifier.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>

using namespace coplan;
using namespace coplan::fixtures;

namespace {

Metadata s1_doc() { return metadata_of(build_instance(s1_raw())); }

// The same S1 instance told with concrete names.
Metadata s1_concrete() {
  RawInstance raw = s1_raw();
  const char* names[] = {"Draft the storyboard", "Record the voice-over", "Cut the teaser"};
  for (std::size_t i = 0; i < raw.tasks.size(); ++i) raw.tasks[i].name = names[i];
  raw.participants[0].name = "Ava";
  raw.participants[1].name = "Noah";
  raw.scenario = "Podcast launch trailer";
  return metadata_of(build_instance(raw));
}

bool has_issue(const CheckReport& r, const NameMapIssue& issue) {
  return std::find(r.name_map_issues.begin(), r.name_map_issues.end(), issue) != r.name_map_issues.end();
}

} // namespace

TEST_CASE("identical documents pass") {
  for (const RawInstance& raw : {s1_raw(), s2_raw(), l1_raw()}) {
    const Metadata doc = metadata_of(build_instance(raw));
    const CheckReport r = hard_check(doc, doc);
    CHECK(r.passed());
    CHECK(to_json(r)["verdict"] == "pass");
  }
}

TEST_CASE("a faithful concretization passes") {
  const CheckReport r = hard_check(s1_doc(), s1_concrete());
  CHECK(r.diffs.empty());
  CHECK(r.name_map_issues.empty());
  CHECK(r.passed());
}

TEST_CASE("a changed duration is reported at its path") {
  Metadata cand = s1_concrete();
  cand["tasks"][0]["duration"]["hours"] = 3;
  const CheckReport r = hard_check(s1_doc(), cand);
  CHECK_FALSE(r.passed());
  REQUIRE(r.diffs.size() == 1);
  CHECK(r.diffs[0].path == "tasks[Task A].duration.hours");
  CHECK(r.diffs[0].prototype == "2");
  CHECK(r.diffs[0].candidate == "3");
  CHECK(to_json(r)["verdict"] == "fail");
}

TEST_CASE("constraint changes are located per agent") {
  Metadata cand = s1_concrete();
  SUBCASE("working hours") {
    cand["agent_constraints"]["Ava"]["working_hours"][0] = "12:00";
    cand["agent_constraints_gmt"]["Ava"]["working_hours"][0][0] = "02:00";
    const CheckReport r = hard_check(s1_doc(), cand);
    CHECK_FALSE(r.passed());
    CHECK(std::any_of(r.diffs.begin(), r.diffs.end(), [](const FieldDiff& d) {
      return d.path.rfind("agent_constraints[Agent1].working_hours", 0) == 0;
    }));
  }
  SUBCASE("dependency") {
    cand["dependencies"][1][0] = "Record the voice-over";
    CHECK_FALSE(hard_check(s1_doc(), cand).passed());
  }
}

TEST_CASE("name map audit") {
  Metadata cand = s1_concrete();
  SUBCASE("missing entry") {
    cand["task_name_map"].erase("Cut the teaser");
    const CheckReport r = hard_check(s1_doc(), cand);
    CHECK_FALSE(r.schema_error);
    CHECK(has_issue(r, {"candidate", "task_name_map", "missing", "Cut the teaser"}));
  }
  SUBCASE("unused entry") {
    cand["agent_name_map"]["Mia"] = "Agent3";
    const CheckReport r = hard_check(s1_doc(), cand);
    CHECK(has_issue(r, {"candidate", "agent_name_map", "unused", "Mia"}));
    CHECK_FALSE(r.passed());
  }
  SUBCASE("two names for one label") {
    cand["task_name_map"]["Cut the teaser"] = "Task B";
    const CheckReport r = hard_check(s1_doc(), cand);
    CHECK(std::any_of(r.name_map_issues.begin(), r.name_map_issues.end(),
                      [](const NameMapIssue& i) { return i.kind == "duplicate"; }));
    CHECK_FALSE(r.passed());
  }
}

TEST_CASE("the check is symmetric") {
  Metadata cand = s1_concrete();
  cand["tasks"][2]["duration"]["hours"] = 2;
  const CheckReport ab = hard_check(s1_doc(), cand);
  const CheckReport ba = hard_check(cand, s1_doc());
  REQUIRE(ab.diffs.size() == ba.diffs.size());
  for (std::size_t i = 0; i < ab.diffs.size(); ++i) {
    CHECK(ab.diffs[i].path == ba.diffs[i].path);
    CHECK(ab.diffs[i].prototype == ba.diffs[i].candidate);
  }
}

TEST_CASE("unparseable metadata is a schema error") {
  Metadata cand = s1_concrete();
  cand.erase("tasks");
  const CheckReport r = hard_check(s1_doc(), cand);
  REQUIRE(r.schema_error);
  CHECK_FALSE(r.passed());
}

TEST_CASE("answer recheck") {
  InstanceRecord rec;
  rec.id = "s1";
  rec.category = Category::Short;
  rec.metadata = s1_doc();
  rec.answer = "2014-12-17 15:00 GMT";
  CHECK(recheck_answer(rec).passed);

  rec.answer = "2014-12-17 16:00 GMT";
  const RecheckResult wrong = recheck_answer(rec);
  CHECK_FALSE(wrong.passed);
  CHECK(wrong.expected == "2014-12-17 15:00 GMT");
  CHECK(wrong.reason == "answer mismatch");

  rec.answer = "soon";
  CHECK(recheck_answer(rec).reason.find("unreadable") != std::string::npos);
}
