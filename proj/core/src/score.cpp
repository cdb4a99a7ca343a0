#include "coplan/score.hpp"

#include "coplan/extract.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

namespace coplan {

using json = nlohmann::ordered_json;

json to_json(const Prediction& p) {
  json j{{"id", p.id}, {"sample", p.sample}, {"output", p.text}};
  if (p.prompt_tokens) j["prompt_tokens"] = *p.prompt_tokens;
  if (p.output_tokens) j["output_tokens"] = *p.output_tokens;
  if (p.error) j["error"] = *p.error;
  return j;
}

Prediction prediction_from_json(const json& j) {
  if (!j.is_object() || !j.contains("id") || !j["id"].is_string()) throw ScoreError("prediction without a string id");
  Prediction p;
  p.id = j["id"].get<std::string>();
  if (j.contains("sample")) p.sample = j["sample"].get<int>();
  for (const char* key : {"output", "text", "prediction"}) {
    if (j.contains(key) && j[key].is_string()) {
      p.text = j[key].get<std::string>();
      break;
    }
  }
  if (j.contains("prompt_tokens") && j["prompt_tokens"].is_number_integer())
    p.prompt_tokens = j["prompt_tokens"].get<long>();
  if (j.contains("output_tokens") && j["output_tokens"].is_number_integer())
    p.output_tokens = j["output_tokens"].get<long>();
  if (j.contains("error") && j["error"].is_string()) p.error = j["error"].get<std::string>();
  return p;
}

std::vector<Prediction> read_predictions(const std::filesystem::path& path) {
  std::vector<Prediction> out;
  for (const auto& row : read_jsonl(path)) out.push_back(prediction_from_json(row));
  return out;
}

void write_predictions(const std::filesystem::path& path, const std::vector<Prediction>& predictions) {
  std::vector<json> rows;
  for (const auto& p : predictions) rows.push_back(to_json(p));
  write_jsonl(path, rows);
}

LengthSummary summarize_lengths(std::vector<long> values) {
  LengthSummary s;
  s.count = static_cast<long>(values.size());
  if (values.empty()) return s;
  std::sort(values.begin(), values.end());
  auto quantile = [&](double q) {
    const double pos = q * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(pos);
    const auto hi = std::min(lo + 1, values.size() - 1);
    return static_cast<double>(values[lo]) +
           (pos - static_cast<double>(lo)) * static_cast<double>(values[hi] - values[lo]);
  };
  s.q1 = quantile(0.25);
  s.median = quantile(0.5);
  s.q3 = quantile(0.75);
  return s;
}

namespace {

struct GoldItem {
  const InstanceRecord* record = nullptr;
  Answer answer;
  Instant start;
  std::set<std::string> zones;
};

GoldItem gold_item(const InstanceRecord& r) {
  GoldItem g;
  g.record = &r;
  const ProblemInstance inst = instance_of(r);
  g.answer = parse_answer(r.answer, r.category);
  g.start = inst.project_start();
  for (const auto& p : inst.participants())
    if (p.clock) g.zones.insert(p.clock->zone_label);
  return g;
}

void count(Tally& t, bool correct, bool unparseable) {
  ++t.total;
  if (correct) ++t.correct;
  if (unparseable) ++t.unparseable;
}

} // namespace

EvalReport score(const std::vector<Prediction>& predictions, const std::vector<InstanceRecord>& gold) {
  std::map<std::string, GoldItem> by_id;
  for (const auto& r : gold)
    if (!by_id.emplace(r.id, gold_item(r)).second) throw ScoreError("duplicate gold id '" + r.id + "'");

  std::set<std::pair<std::string, int>> seen;
  std::map<std::string, int> samples;
  for (const auto& p : predictions) {
    if (!by_id.count(p.id)) throw ScoreError("prediction id '" + p.id + "' is not in the gold set");
    if (!seen.emplace(p.id, p.sample).second)
      throw ScoreError("duplicate prediction for id '" + p.id + "' sample " + std::to_string(p.sample));
    ++samples[p.id];
  }

  EvalReport report;
  int max_samples = 1;
  for (const auto& [id, n] : samples) max_samples = std::max(max_samples, n);
  report.mode = max_samples == 1 ? "greedy" : "sampled-" + std::to_string(max_samples);

  std::vector<long> right_lengths, wrong_lengths;
  auto record_item = [&](const GoldItem& g, bool correct, bool unparseable) {
    const std::string cat(to_string(g.record->category));
    count(report.overall, correct, unparseable);
    count(report.by_category[cat], correct, unparseable);
    count(report.by_dependency[cat][std::string(to_string(g.record->dependency_type))], correct, unparseable);
    count(report.by_domain[g.record->domain], correct, unparseable);
    for (const auto& z : g.zones) count(report.by_zone[z], correct, unparseable);
  };

  for (const auto& p : predictions) {
    const GoldItem& g = by_id.at(p.id);
    std::optional<Answer> got;
    if (!p.error) got = extract_answer(p.text, g.record->category, g.start);
    const bool correct = got && *got == g.answer;
    record_item(g, correct, !got);
    if (p.output_tokens) (correct ? right_lengths : wrong_lengths).push_back(*p.output_tokens);
  }
  for (const auto& [id, g] : by_id) {
    if (samples.count(id)) continue;
    ++report.missing;
    record_item(g, false, true);
  }
  report.correct_lengths = summarize_lengths(std::move(right_lengths));
  report.incorrect_lengths = summarize_lengths(std::move(wrong_lengths));
  return report;
}

namespace {

json tally_json(const Tally& t) {
  return json{{"total", t.total}, {"correct", t.correct}, {"unparseable", t.unparseable}, {"accuracy", t.accuracy()}};
}

json lengths_json(const LengthSummary& s) {
  return json{{"count", s.count}, {"median", s.median}, {"q1", s.q1}, {"q3", s.q3}};
}

std::string pct(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

} // namespace

json to_json(const EvalReport& r) {
  json j;
  j["mode"] = r.mode;
  j["overall"] = tally_json(r.overall);
  j["short"] = tally_json(r.by_category.count("short") ? r.by_category.at("short") : Tally{});
  j["long"] = tally_json(r.by_category.count("long") ? r.by_category.at("long") : Tally{});
  json deps = json::object();
  for (const auto& [cat, types] : r.by_dependency)
    for (const auto& [type, t] : types) deps[cat][type] = tally_json(t);
  j["by_dependency"] = deps;
  json domains = json::object();
  for (const auto& [d, t] : r.by_domain) domains[d] = tally_json(t);
  j["by_domain"] = domains;
  json zones = json::object();
  for (const auto& [z, t] : r.by_zone)
    zones[z] = json{{"instances", t.total}, {"errors", t.total - t.correct}, {"error_rate", t.error_rate()}};
  j["by_zone"] = zones;
  j["output_tokens"] =
      json{{"correct", lengths_json(r.correct_lengths)}, {"incorrect", lengths_json(r.incorrect_lengths)}};
  j["missing"] = r.missing;
  return j;
}

std::string to_markdown(const EvalReport& r) {
  std::ostringstream os;
  auto acc = [&](const char* cat) { return r.by_category.count(cat) ? pct(r.by_category.at(cat).accuracy()) : "-"; };
  os << "| Mode | Short | Long | Overall |\n|---|---:|---:|---:|\n";
  os << "| " << r.mode << " | " << acc("short") << " | " << acc("long") << " | " << pct(r.overall.accuracy())
     << " |\n\n";
  os << "Scored items: " << r.overall.total << ", correct: " << r.overall.correct
     << ", unparseable: " << r.overall.unparseable << ", missing predictions: " << r.missing << "\n\n";

  os << "### Dependency type\n\n| Category | Type | N | Accuracy |\n|---|---|---:|---:|\n";
  for (const auto& [cat, types] : r.by_dependency)
    for (const auto& [type, t] : types)
      os << "| " << cat << " | " << type << " | " << t.total << " | " << pct(t.accuracy()) << " |\n";

  os << "\n### Domain\n\n| Domain | N | Accuracy |\n|---|---:|---:|\n";
  for (const auto& [d, t] : r.by_domain) os << "| " << d << " | " << t.total << " | " << pct(t.accuracy()) << " |\n";

  if (!r.by_zone.empty()) {
    os << "\n### Time zone\n\n| Zone | N | Errors | Error rate |\n|---|---:|---:|---:|\n";
    for (const auto& [z, t] : r.by_zone)
      os << "| " << z << " | " << t.total << " | " << (t.total - t.correct) << " | " << pct(t.error_rate()) << " |\n";
  }

  if (r.correct_lengths.count + r.incorrect_lengths.count > 0) {
    os << "\n### Output tokens\n\n| Outcome | N | Q1 | Median | Q3 |\n|---|---:|---:|---:|---:|\n";
    for (const auto& [name, s] : {std::pair<const char*, const LengthSummary*>{"correct", &r.correct_lengths},
                                  {"incorrect", &r.incorrect_lengths}})
      os << "| " << name << " | " << s->count << " | " << pct(s->q1) << " | " << pct(s->median) << " | " << pct(s->q3)
         << " |\n";
  }
  return os.str();
}

} // namespace coplan
