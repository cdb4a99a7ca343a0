#include "coplan/baseline.hpp"
#include "coplan/generator.hpp"
#include "coplan/runner.hpp"
#include "coplan/score.hpp"
#include "coplan/solver.hpp"
#include "coplan/verifier.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <thread>

using namespace coplan;
using json = nlohmann::ordered_json;

namespace {

// Rows may be full records or bare metadata objects.
std::pair<std::string, ProblemInstance> instance_row(const json& row, std::size_t line) {
  if (row.contains("metadata")) {
    InstanceRecord r = record_from_json(row);
    return {r.id, instance_of(r)};
  }
  const std::string id =
      row.contains("id") && row["id"].is_string() ? row["id"].get<std::string>() : std::to_string(line);
  return {id, instance_from_metadata(row)};
}

json witness_json(const ProblemInstance& inst, const Schedule& s) {
  json out = json::array();
  for (const auto& e : s.entries) {
    json j{{"task", inst.tasks()[e.task].name}, {"participant", inst.participants()[e.participant].name}};
    if (inst.category() == Category::Short) {
      j["start"] = format_instant(e.span.begin);
      j["end"] = format_instant(e.span.end);
    } else {
      json days = json::array();
      for (auto d : e.days) days.push_back(format_date(d));
      j["days"] = days;
    }
    out.push_back(j);
  }
  return out;
}

int cmd_solve(const std::string& in, const std::string& out, bool witness) {
  std::vector<json> answers;
  int infeasible = 0;
  std::size_t line = 0;
  for (const auto& row : read_jsonl(in)) {
    ++line;
    auto [id, inst] = instance_row(row, line);
    json a{{"id", id}};
    try {
      Solution s = solve_optimal(inst);
      a["answer"] = format_answer(s.answer);
      if (witness) a["witness"] = witness_json(inst, s.witness);
    } catch (const InfeasibleError& e) {
      a["error"] = std::string("infeasible: ") + e.what();
      ++infeasible;
    }
    answers.push_back(std::move(a));
  }
  write_jsonl(out, answers);
  if (infeasible > 0) {
    std::cerr << infeasible << " of " << answers.size() << " instances are infeasible\n";
    return 2;
  }
  std::cerr << "solved " << answers.size() << " instances\n";
  return 0;
}

int cmd_generate(const std::string& category, std::size_t count, std::uint64_t seed, const std::string& out,
                 unsigned threads, const std::vector<double>& mix) {
  GenerationConfig config = GenerationConfig::defaults(parse_category(category));
  config.count = count;
  config.seed = seed;
  if (!mix.empty()) {
    if (mix.size() != 3) throw std::invalid_argument("--dependency-mix takes three weights: fork chain join");
    config.dependency_mix = {mix[0], mix[1], mix[2]};
  }
  write_records(out, generate_batch(config, threads));
  std::cerr << "wrote " << count << " " << category << " records to " << out << "\n";
  return 0;
}

int cmd_validate(const std::string& prototypes, const std::string& candidates, const std::string& report_path) {
  std::map<std::string, InstanceRecord> protos;
  for (auto& r : read_records(prototypes)) protos.emplace(r.id, std::move(r));
  json results = json::array();
  int passed = 0, failed = 0, schema = 0, unmatched = 0;
  for (const auto& c : read_records(candidates)) {
    json item{{"id", c.id}};
    auto it = protos.find(c.id);
    if (it == protos.end()) {
      item["verdict"] = "fail";
      item["error"] = "no prototype with this id";
      ++unmatched;
      ++failed;
      results.push_back(item);
      continue;
    }
    const CheckReport check = hard_check(it->second.metadata, c.metadata);
    const RecheckResult recheck = recheck_answer(c);
    item["hard_check"] = to_json(check);
    item["answer_recheck"] =
        json{{"passed", recheck.passed}, {"expected", recheck.expected}, {"stored", recheck.stored}};
    if (!recheck.reason.empty()) item["answer_recheck"]["reason"] = recheck.reason;
    const bool ok = check.passed() && recheck.passed;
    item["verdict"] = ok ? "pass" : "fail";
    if (check.schema_error) ++schema;
    (ok ? passed : failed)++;
    results.push_back(item);
  }
  json report{{"summary",
               {{"candidates", passed + failed},
                {"passed", passed},
                {"failed", failed},
                {"schema_errors", schema},
                {"unmatched", unmatched}}},
              {"results", results}};
  std::ofstream(report_path) << report.dump(2) << '\n';
  std::cerr << passed << " passed, " << failed << " failed\n";
  return failed == 0 ? 0 : 2;
}

void write_report(const EvalReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  if (path.size() >= 3 && path.substr(path.size() - 3) == ".md")
    out << to_markdown(report);
  else
    out << to_json(report).dump(2) << '\n';
}

int cmd_evaluate(const std::string& gold, const std::string& pred, const std::string& report_path) {
  const EvalReport report = score(read_predictions(pred), read_records(gold));
  write_report(report, report_path);
  std::cout << to_markdown(report);
  return 0;
}

int cmd_run(const std::string& gold_path, std::string endpoint, const std::string& tmpl, int samples,
            const std::string& out, const std::string& transcript, const std::string& report_path,
            unsigned concurrency) {
  HttpClientConfig config = HttpClientConfig::from_env();
  if (!endpoint.empty()) config.endpoint = endpoint;
  if (config.endpoint.empty()) throw std::invalid_argument("no endpoint: pass --endpoint or set COPLAN_ENDPOINT");
  HttpTextClient client(config);
  RunConfig run;
  run.prompt = parse_prompt_template(tmpl);
  run.samples = samples;
  run.concurrency = concurrency;
  if (!transcript.empty()) run.transcript = transcript;
  const auto gold = read_records(gold_path);
  const auto predictions = run_model(gold, client, run);
  write_predictions(out, predictions);
  const EvalReport report = score(predictions, gold);
  if (!report_path.empty()) write_report(report, report_path);
  std::cout << to_markdown(report);
  return 0;
}

int cmd_baseline(const std::string& gold_path, std::size_t trials, std::uint64_t seed) {
  const auto gold = read_records(gold_path);
  json out = json::object();
  for (auto c : {Category::Short, Category::Long}) {
    const bool any = std::any_of(gold.begin(), gold.end(), [&](const InstanceRecord& r) { return r.category == c; });
    if (any) out[std::string(to_string(c))] = random_baseline(c, gold, trials, seed);
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-participant temporal scheduling: solve, generate, verify and score"};
  app.require_subcommand(1);

  std::string in, out, prototypes, candidates, report, gold, pred, endpoint, tmpl = "cot", transcript;
  std::string category;
  bool witness = false;
  std::size_t count = 300, trials = 10000;
  std::uint64_t seed = 0;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  unsigned concurrency = 4;
  int samples = 1;
  std::vector<double> mix;

  auto* solve = app.add_subcommand("solve", "Compute the earliest completion of each instance");
  solve->add_option("--in", in, "Records or metadata, one JSON object per line")->required();
  solve->add_option("--out", out, "Answers, one JSON object per line")->required();
  solve->add_flag("--witness", witness, "Include an optimal schedule");

  auto* generate = app.add_subcommand("generate", "Generate verified prototype records");
  generate->add_option("--category", category)->required()->check(CLI::IsMember({"short", "long"}));
  generate->add_option("--count", count)->required();
  generate->add_option("--seed", seed)->required();
  generate->add_option("--out", out)->required();
  generate->add_option("--threads", threads);
  generate->add_option("--dependency-mix", mix, "Weights for fork, chain, join")->expected(3);

  auto* validate = app.add_subcommand("validate", "Hard-check candidates against their prototypes");
  validate->add_option("--prototypes", prototypes)->required();
  validate->add_option("--candidates", candidates)->required();
  validate->add_option("--report", report)->required();

  auto* evaluate = app.add_subcommand("evaluate", "Score predictions against gold records");
  evaluate->add_option("--gold", gold)->required();
  evaluate->add_option("--pred", pred)->required();
  evaluate->add_option("--report", report, "JSON, or a markdown table when the name ends in .md")->required();

  auto* run = app.add_subcommand("run", "Query a text-generation endpoint and score the answers");
  run->add_option("--gold", gold)->required();
  run->add_option("--endpoint", endpoint, "Overrides COPLAN_ENDPOINT; the key comes from COPLAN_API_KEY");
  run->add_option("--template", tmpl)->check(CLI::IsMember({"cot", "plain"}));
  run->add_option("--samples", samples, "1 for greedy decoding, 3 to average sampled runs");
  run->add_option("--out", out, "Predictions file")->default_val("predictions.jsonl");
  run->add_option("--transcript", transcript, "Append every request and response here");
  run->add_option("--report", report);
  run->add_option("--concurrency", concurrency);

  auto* baseline = app.add_subcommand("baseline", "Monte-Carlo accuracy of uniform guessing");
  baseline->add_option("--gold", gold)->required();
  baseline->add_option("--trials", trials);
  baseline->add_option("--seed", seed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return cmd_solve(in, out, witness);
    if (*generate) return cmd_generate(category, count, seed, out, threads, mix);
    if (*validate) return cmd_validate(prototypes, candidates, report);
    if (*evaluate) return cmd_evaluate(gold, pred, report);
    if (*run) return cmd_run(gold, endpoint, tmpl, samples, out, transcript, report, concurrency);
    if (*baseline) return cmd_baseline(gold, trials, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
