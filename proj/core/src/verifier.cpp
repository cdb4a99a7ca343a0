#include "coplan/verifier.hpp"

#include "coplan/solver.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace coplan {

using json = nlohmann::ordered_json;

namespace {

// Name resolution for one document, recording audit problems as it goes.
class Resolver {
public:
  Resolver(const json& doc, std::string side, std::vector<NameMapIssue>& issues)
      : side_(std::move(side)), issues_(issues) {
    tasks_ = load(doc, "task_name_map", task_names(doc));
    agents_ = load(doc, "agent_name_map", agent_names(doc));
  }

  std::string task(const std::string& name) { return resolve(tasks_, "task_name_map", name); }
  std::string agent(const std::string& name) { return resolve(agents_, "agent_name_map", name); }

private:
  static std::vector<std::string> task_names(const json& doc) {
    std::vector<std::string> out;
    for (const auto& t : doc.at("tasks")) out.push_back(t.at("name").get<std::string>());
    return out;
  }
  static std::vector<std::string> agent_names(const json& doc) {
    std::vector<std::string> out;
    for (const auto& a : doc.at("agents")) out.push_back(a.get<std::string>());
    return out;
  }

  std::map<std::string, std::string> load(const json& doc, const std::string& key,
                                          const std::vector<std::string>& names) {
    std::map<std::string, std::string> map;
    std::map<std::string, std::string> owner; // generic -> first concrete name
    for (const auto& [concrete, generic] : doc.at(key).items()) {
      const std::string g = generic.get<std::string>();
      map[concrete] = g;
      if (auto [it, fresh] = owner.emplace(g, concrete); !fresh) issues_.push_back({side_, key, "duplicate", concrete});
    }
    std::set<std::string> listed;
    for (const auto& n : names) {
      if (!listed.insert(n).second) issues_.push_back({side_, key, "duplicate", n});
      if (!map.count(n)) issues_.push_back({side_, key, "missing", n});
    }
    for (const auto& [concrete, generic] : map)
      if (!listed.count(concrete)) issues_.push_back({side_, key, "unused", concrete});
    return map;
  }

  std::string resolve(const std::map<std::string, std::string>& map, const std::string& key, const std::string& name) {
    auto it = map.find(name);
    if (it != map.end()) return it->second;
    const NameMapIssue issue{side_, key, "missing", name};
    if (std::find(issues_.begin(), issues_.end(), issue) == issues_.end()) issues_.push_back(issue);
    return name;
  }

  std::string side_;
  std::vector<NameMapIssue>& issues_;
  std::map<std::string, std::string> tasks_;
  std::map<std::string, std::string> agents_;
};

json rekey(const json& obj, Resolver& r, std::string (Resolver::*map)(const std::string&)) {
  json out = json::object();
  std::map<std::string, json> sorted;
  for (const auto& [k, v] : obj.items()) sorted[(r.*map)(k)] = v;
  for (auto& [k, v] : sorted) out[k] = std::move(v);
  return out;
}

// Rewrites the document onto generic labels with a stable key order.
json canonical(const json& doc, Resolver& r) {
  json out = json::object();
  std::map<std::string, json> rest;
  for (const auto& [key, value] : doc.items()) {
    if (key == "task_name_map" || key == "agent_name_map" || key == "scenario") continue;
    if (key == "tasks") {
      std::map<std::string, json> tasks;
      for (const auto& t : value) {
        json copy = t;
        copy.erase("name");
        tasks[r.task(t.at("name").get<std::string>())] = std::move(copy);
      }
      json obj = json::object();
      for (auto& [k, v] : tasks) obj[k] = std::move(v);
      rest[key] = std::move(obj);
    } else if (key == "agents") {
      std::vector<std::string> labels;
      for (const auto& a : value) labels.push_back(r.agent(a.get<std::string>()));
      std::sort(labels.begin(), labels.end());
      rest[key] = labels;
    } else if (key == "dependencies") {
      std::vector<std::string> edges;
      for (const auto& e : value)
        edges.push_back(r.task(e.at(0).get<std::string>()) + " -> " + r.task(e.at(1).get<std::string>()));
      std::sort(edges.begin(), edges.end());
      json obj = json::object();
      for (const auto& e : edges) obj[e] = true;
      rest[key] = std::move(obj);
    } else if (key == "dependency_graph") {
      json obj = json::object();
      std::map<std::string, std::vector<std::string>> graph;
      for (const auto& [task, prereqs] : value.items()) {
        auto& list = graph[r.task(task)];
        for (const auto& p : prereqs) list.push_back(r.task(p.get<std::string>()));
        std::sort(list.begin(), list.end());
      }
      for (auto& [k, v] : graph) obj[k] = v;
      rest[key] = std::move(obj);
    } else if (key == "agent_constraints" || key == "agent_constraints_gmt" || key == "agent_unavailable_dates") {
      rest[key] = rekey(value, r, &Resolver::agent);
    } else {
      rest[key] = value;
    }
  }
  for (auto& [k, v] : rest) out[k] = std::move(v);
  return out;
}

void flatten(const json& v, const std::string& path, std::map<std::string, std::string>& out) {
  if (v.is_object() && !v.empty()) {
    for (const auto& [k, child] : v.items()) {
      const bool bracket = path == "tasks" || path == "agent_constraints" || path == "agent_constraints_gmt" ||
                           path == "agent_unavailable_dates" || path == "dependency_graph" || path == "dependencies";
      flatten(child, path.empty() ? k : bracket ? path + "[" + k + "]" : path + "." + k, out);
    }
  } else if (v.is_array() && !v.empty() &&
             std::any_of(v.begin(), v.end(), [](const json& x) { return x.is_structured(); })) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out[path] = v.dump();
  }
}

} // namespace

CheckReport hard_check(const Metadata& prototype, const Metadata& candidate) {
  CheckReport report;
  for (const auto& [side, doc] :
       {std::pair<const char*, const json*>{"prototype", &prototype}, {"candidate", &candidate}}) {
    try {
      parse_metadata(*doc);
    } catch (const SchemaError& e) {
      // A name missing from a map surfaces here too; keep auditing in that case.
      if (std::string(e.what()).find("missing from name map") == std::string::npos) {
        report.schema_error = std::string(side) + ": " + e.what();
        return report;
      }
    } catch (const std::exception& e) {
      report.schema_error = std::string(side) + ": " + e.what();
      return report;
    }
  }

  std::map<std::string, std::string> left, right;
  try {
    Resolver rp(prototype, "prototype", report.name_map_issues);
    Resolver rc(candidate, "candidate", report.name_map_issues);
    flatten(canonical(prototype, rp), "", left);
    flatten(canonical(candidate, rc), "", right);
  } catch (const json::exception& e) {
    report.schema_error = e.what();
    return report;
  }

  std::set<std::string> paths;
  for (const auto& [k, v] : left) paths.insert(k);
  for (const auto& [k, v] : right) paths.insert(k);
  for (const auto& p : paths) {
    auto a = left.find(p);
    auto b = right.find(p);
    const std::string va = a == left.end() ? "<absent>" : a->second;
    const std::string vb = b == right.end() ? "<absent>" : b->second;
    if (va != vb) report.diffs.push_back({p, va, vb});
  }
  return report;
}

json to_json(const CheckReport& report) {
  json diffs = json::array();
  for (const auto& d : report.diffs)
    diffs.push_back({{"path", d.path}, {"prototype", d.prototype}, {"candidate", d.candidate}});
  json issues = json::array();
  for (const auto& i : report.name_map_issues)
    issues.push_back({{"side", i.side}, {"map", i.map}, {"kind", i.kind}, {"name", i.name}});
  json out{{"verdict", report.passed() ? "pass" : "fail"}, {"diffs", diffs}, {"name_map_issues", issues}};
  if (report.schema_error) out["schema_error"] = *report.schema_error;
  return out;
}

RecheckResult recheck_answer(const InstanceRecord& record) {
  RecheckResult result;
  result.stored = record.answer;
  try {
    const ProblemInstance inst = instance_of(record);
    const Answer expected = solve_optimal(inst).answer;
    result.expected = format_answer(expected);
    Answer stored;
    try {
      stored = parse_answer(record.answer, inst.category());
    } catch (const ParseError& e) {
      result.reason = std::string("stored answer unreadable: ") + e.what();
      return result;
    }
    result.passed = stored == expected;
    if (!result.passed) result.reason = "answer mismatch";
  } catch (const InfeasibleError& e) {
    result.reason = std::string("infeasible: ") + e.what();
  } catch (const std::exception& e) {
    result.reason = e.what();
  }
  return result;
}

} // namespace coplan
