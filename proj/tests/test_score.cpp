#include "coplan/baseline.hpp"
#include "coplan/generator.hpp"
#include "coplan/score.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace coplan;

namespace {

InstanceRecord record_for(const RawInstance& raw, std::string id, std::string answer) {
  const ProblemInstance inst = build_instance(raw);
  InstanceRecord r;
  r.id = std::move(id);
  r.category = inst.category();
  r.domain = raw.domain;
  r.dependency_type = raw.dependency_type;
  r.metadata = metadata_of(inst);
  r.answer = std::move(answer);
  return r;
}

std::vector<InstanceRecord> gold_set() {
  return {record_for(fixtures::s1_raw(), "s1", "2014-12-17 15:00 GMT"),
          record_for(fixtures::s2_raw(), "s2", "2024-05-14 14:00 GMT"),
          record_for(fixtures::l1_raw(), "l1", "2021-09-14")};
}

Prediction pred(std::string id, std::string text, int sample = 0, long tokens = 100) {
  Prediction p;
  p.id = std::move(id);
  p.sample = sample;
  p.text = std::move(text);
  p.output_tokens = tokens;
  return p;
}

} // namespace

TEST_CASE("three of six correct is 50%") {
  const std::vector<Prediction> preds{pred("s1", "\\boxed{15:00 GMT}", 0, 10),
                                      pred("s1", "The final answer is 16:00 GMT", 1, 20),
                                      pred("s2", "Final answer: 2024-05-14 14:00 GMT", 0, 30),
                                      pred("s2", "no idea", 1, 40),
                                      pred("l1", "The final answer is 2021-09-14.", 0, 50),
                                      pred("l1", "Sept 15", 1, 60)};
  const EvalReport r = score(preds, gold_set());
  CHECK(r.mode == "sampled-2");
  CHECK(r.overall.total == 6);
  CHECK(r.overall.correct == 3);
  CHECK(r.overall.unparseable == 1);
  CHECK(r.overall.accuracy() == doctest::Approx(50.0));
  CHECK(r.by_category.at("short").correct == 2);
  CHECK(r.by_category.at("long").total == 2);
  CHECK(r.by_dependency.at("long").at("fork").correct == 1);
  CHECK(r.correct_lengths.count == 3);
  CHECK(r.correct_lengths.median == doctest::Approx(30.0));
  CHECK(r.missing == 0);

  const auto j = to_json(r);
  CHECK(j["mode"] == "sampled-2");
  CHECK(to_markdown(r).find("| Mode | Short | Long | Overall |") != std::string::npos);
}

TEST_CASE("greedy mode and missing predictions") {
  const EvalReport r = score({pred("s1", "15:00 GMT")}, gold_set());
  CHECK(r.mode == "greedy");
  CHECK(r.missing == 2);
  CHECK(r.overall.total == 3);
  CHECK(r.overall.correct == 1);
  CHECK(r.overall.unparseable == 2);
}

TEST_CASE("failed requests score as unparseable") {
  Prediction p = pred("s1", "");
  p.error = "timeout";
  const EvalReport r = score({p}, {gold_set()[0]});
  CHECK(r.overall.unparseable == 1);
  CHECK(r.overall.correct == 0);
}

TEST_CASE("bad prediction sets are rejected") {
  CHECK_THROWS_AS(score({pred("s1", "a"), pred("s1", "b")}, gold_set()), ScoreError);
  CHECK_THROWS_AS(score({pred("zz", "a")}, gold_set()), ScoreError);
}

TEST_CASE("zone attribution") {
  RawInstance raw = fixtures::s1_raw();
  raw.participants[1] = fixtures::clock_participant("Agent2", "Agent2", "NZST", 9, 17, 12, 13, std::nullopt);
  const InstanceRecord nz = record_for(raw, "nz", "2014-12-17 15:00 GMT");
  const EvalReport r = score({pred("nz", "2014-12-17 15:00 GMT")}, {nz});
  CHECK(r.by_zone.at("NZST").total == 1);
  CHECK(r.by_zone.at("AEST").total == 1);
  CHECK(r.by_zone.count("EST") == 0);
}

TEST_CASE("partitions add up and order does not matter") {
  GenerationConfig config = GenerationConfig::defaults(Category::Short);
  config.count = 30;
  auto gold = generate_batch(config);
  config = GenerationConfig::defaults(Category::Long);
  config.count = 30;
  for (auto& r : generate_batch(config)) gold.push_back(r);

  std::mt19937 rng(1);
  std::vector<Prediction> preds;
  for (const auto& g : gold) preds.push_back(pred(g.id, rng() % 2 ? g.answer : "nothing useful"));

  const EvalReport a = score(preds, gold);
  long sum = 0, correct = 0;
  for (const auto& [c, t] : a.by_category) {
    sum += t.total;
    correct += t.correct;
    long dep = 0;
    for (const auto& [d, u] : a.by_dependency.at(c)) dep += u.total;
    CHECK(dep == t.total);
  }
  long domains = 0;
  for (const auto& [d, t] : a.by_domain) domains += t.total;
  CHECK(sum == a.overall.total);
  CHECK(domains == a.overall.total);
  CHECK(correct == a.overall.correct);

  std::shuffle(preds.begin(), preds.end(), rng);
  std::reverse(gold.begin(), gold.end());
  const EvalReport b = score(preds, gold);
  CHECK(to_json(a) == to_json(b));
}

TEST_CASE("quartiles interpolate") {
  const LengthSummary s = summarize_lengths({4, 1, 3, 2});
  CHECK(s.count == 4);
  CHECK(s.median == doctest::Approx(2.5));
  CHECK(s.q1 == doctest::Approx(1.75));
  CHECK(s.q3 == doctest::Approx(3.25));
  CHECK(summarize_lengths({}).count == 0);
}

TEST_CASE("random guessing lands near one over the candidate count") {
  GenerationConfig config = GenerationConfig::defaults(Category::Short);
  config.count = 60;
  const auto shorts = generate_batch(config);
  config = GenerationConfig::defaults(Category::Long);
  config.count = 60;
  const auto longs = generate_batch(config);

  for (const auto& r : shorts) {
    const auto c = guess_candidates(instance_of(r));
    CHECK(c.size() == 24);
    CHECK(std::count(c.begin(), c.end(), parse_answer(r.answer, Category::Short)) == 1);
  }
  CHECK(random_baseline(Category::Short, shorts, 200000, 7) == doctest::Approx(100.0 / 24).epsilon(0.05));
  CHECK(random_baseline(Category::Long, longs, 200000, 7) == doctest::Approx(100.0 / 7).epsilon(0.05));
  CHECK_THROWS(random_baseline(Category::Short, shorts, 0, 7));
  CHECK_THROWS(random_baseline(std::vector<BaselineItem>{}, 10, 7));
}
