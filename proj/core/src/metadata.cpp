#include "coplan/metadata.hpp"

#include <algorithm>
#include <map>

namespace coplan {

using json = nlohmann::ordered_json;

namespace {

const json& member(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw SchemaError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path + "." + key, "missing");
  return *it;
}

const json* optional_member(const json& obj, const std::string& key) {
  auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

std::string string_at(const json& v, const std::string& path) {
  if (!v.is_string()) throw SchemaError(path, "expected a string");
  return v.get<std::string>();
}

int int_at(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw SchemaError(path, "expected an integer");
  return v.get<int>();
}

const json& array_at(const json& v, const std::string& path) {
  if (!v.is_array()) throw SchemaError(path, "expected an array");
  return v;
}

template <typename F>
auto text_at(const json& v, const std::string& path, F&& parse) {
  const std::string s = string_at(v, path);
  try {
    return parse(s);
  } catch (const ParseError& e) {
    throw SchemaError(path, e.what());
  }
}

Quantity quantity_at(const json& v, const std::string& path) {
  if (!v.is_object() || v.size() != 1) throw SchemaError(path, "expected {\"hours\": n} or {\"days\": n}");
  const auto& [key, value] = *v.items().begin();
  if (key == "hours") return {int_at(value, path + ".hours"), TimeUnit::Hour};
  if (key == "days") return {int_at(value, path + ".days"), TimeUnit::Day};
  throw SchemaError(path, "unknown unit '" + key + "'");
}

ClockWindow window_at(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2) throw SchemaError(path, "expected [\"HH:MM\", \"HH:MM\"]");
  const int start = text_at(v[0], path + "[0]", parse_clock);
  const int end = text_at(v[1], path + "[1]", parse_clock);
  try {
    return ClockWindow(start, end);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path, e.what());
  }
}

json window_json(const ClockWindow& w) { return json::array({format_clock(w.start()), format_clock(w.end())}); }

std::map<std::string, std::string> name_map_at(const json& doc, const std::string& key) {
  std::map<std::string, std::string> out;
  const json& m = member(doc, key, "$");
  if (!m.is_object()) throw SchemaError(key, "expected an object");
  for (const auto& [concrete, generic] : m.items()) out[concrete] = string_at(generic, key + "[" + concrete + "]");
  return out;
}

std::string resolve(const std::map<std::string, std::string>& map, const std::string& name, const std::string& path) {
  auto it = map.find(name);
  if (it == map.end()) throw SchemaError(path, "name '" + name + "' missing from name map");
  return it->second;
}

} // namespace

json quantity_json(int value, TimeUnit unit) { return json{{std::string(to_string(unit)), value}}; }

Metadata metadata_of(const ProblemInstance& instance) {
  const TimeUnit unit = instance.unit();
  const bool is_short = instance.category() == Category::Short;
  json doc;
  doc["category"] = std::string(to_string(instance.category()));
  doc["project_start"] = is_short ? format_instant(instance.project_start()) : format_date(instance.start_date());
  doc["horizon"] = quantity_json(instance.slot_count(), unit);
  doc["dependency_type"] = std::string(to_string(instance.dependencies().type()));
  if (!instance.scenario().empty()) doc["scenario"] = instance.scenario();

  const auto& tasks = instance.tasks();
  json task_list = json::array();
  for (const auto& t : tasks)
    task_list.push_back(json{{"name", t.name}, {"duration", quantity_json(t.duration, unit)}});
  doc["tasks"] = std::move(task_list);

  json agents = json::array();
  for (const auto& p : instance.participants()) agents.push_back(p.name);
  doc["agents"] = std::move(agents);

  json deps = json::array();
  for (const auto& e : instance.dependencies().edges())
    deps.push_back(json::array({tasks[e.before].name, tasks[e.after].name}));
  doc["dependencies"] = std::move(deps);

  json graph = json::object();
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    json prereqs = json::array();
    for (auto p : instance.dependencies().predecessors(i)) prereqs.push_back(tasks[p].name);
    graph[tasks[i].name] = std::move(prereqs);
  }
  doc["dependency_graph"] = std::move(graph);

  json task_map = json::object();
  for (const auto& t : tasks) task_map[t.name] = t.label;
  doc["task_name_map"] = std::move(task_map);
  json agent_map = json::object();
  for (const auto& p : instance.participants()) agent_map[p.name] = p.label;
  doc["agent_name_map"] = std::move(agent_map);

  json constraints = json::object();
  json gmt = json::object();
  json unavailable_dates = json::object();
  for (const auto& p : instance.participants()) {
    json c = json::object();
    if (is_short) {
      c["timezone"] = p.clock->zone_label;
      c["utc_offset"] = p.clock->zone.hours();
      c["working_hours"] = window_json(p.clock->working);
      if (p.clock->meal) c["meal_break"] = window_json(*p.clock->meal);

      json g = json::object();
      json work = json::array();
      for (const auto& w : gmt_clock_image(p.clock->working, p.clock->zone)) work.push_back(window_json(w));
      g["working_hours"] = std::move(work);
      json meal = json::array();
      if (p.clock->meal)
        for (const auto& w : gmt_clock_image(*p.clock->meal, p.clock->zone)) meal.push_back(window_json(w));
      g["meal_break"] = std::move(meal);
      json unavailable = json::array();
      for (const auto& iv : p.unavailable_intervals)
        unavailable.push_back(json::array({format_instant(iv.begin), format_instant(iv.end)}));
      g["unavailable"] = std::move(unavailable);
      gmt[p.name] = std::move(g);
    } else {
      c["working_days"] = std::string(to_string(p.working_days));
      json dates = json::array();
      for (auto d : p.unavailable_dates) dates.push_back(format_date(d));
      unavailable_dates[p.name] = std::move(dates);
    }
    if (p.break_between) c["break_between"] = quantity_json(*p.break_between, unit);
    if (p.break_after)
      c["break_after"] = json{{"max_consecutive", quantity_json(p.break_after->max_consecutive, unit)},
                              {"rest", quantity_json(p.break_after->rest, unit)}};
    constraints[p.name] = std::move(c);
  }
  doc["agent_constraints"] = std::move(constraints);
  if (is_short)
    doc["agent_constraints_gmt"] = std::move(gmt);
  else
    doc["agent_unavailable_dates"] = std::move(unavailable_dates);
  return doc;
}

RawInstance parse_metadata(const json& doc) {
  if (!doc.is_object()) throw SchemaError("$", "metadata must be a JSON object");
  RawInstance raw;
  raw.category = text_at(member(doc, "category", "$"), "category", parse_category);
  const bool is_short = raw.category == Category::Short;
  raw.project_start = is_short ? text_at(member(doc, "project_start", "$"), "project_start", parse_instant)
                               : start_of(text_at(member(doc, "project_start", "$"), "project_start", parse_date));
  if (const json* h = optional_member(doc, "horizon")) raw.horizon = quantity_at(*h, "horizon");
  raw.dependency_type = text_at(member(doc, "dependency_type", "$"), "dependency_type", parse_dependency_type);
  if (const json* s = optional_member(doc, "scenario")) raw.scenario = string_at(*s, "scenario");

  const auto task_map = name_map_at(doc, "task_name_map");
  const auto agent_map = name_map_at(doc, "agent_name_map");

  const json& tasks = array_at(member(doc, "tasks", "$"), "tasks");
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const std::string path = "tasks[" + std::to_string(i) + "]";
    RawTask t;
    t.name = string_at(member(tasks[i], "name", path), path + ".name");
    t.label = resolve(task_map, t.name, path + ".name");
    t.duration = quantity_at(member(tasks[i], "duration", path), path + ".duration");
    raw.tasks.push_back(std::move(t));
  }
  std::sort(raw.tasks.begin(), raw.tasks.end(), [](const RawTask& a, const RawTask& b) { return a.label < b.label; });

  const json& deps = array_at(member(doc, "dependencies", "$"), "dependencies");
  for (std::size_t i = 0; i < deps.size(); ++i) {
    const std::string path = "dependencies[" + std::to_string(i) + "]";
    if (!deps[i].is_array() || deps[i].size() != 2) throw SchemaError(path, "expected [before, after]");
    raw.dependencies.emplace_back(resolve(task_map, string_at(deps[i][0], path + "[0]"), path + "[0]"),
                                  resolve(task_map, string_at(deps[i][1], path + "[1]"), path + "[1]"));
  }

  const json& agents = array_at(member(doc, "agents", "$"), "agents");
  const json& constraints = member(doc, "agent_constraints", "$");
  for (std::size_t i = 0; i < agents.size(); ++i) {
    RawParticipant p;
    p.name = string_at(agents[i], "agents[" + std::to_string(i) + "]");
    p.label = resolve(agent_map, p.name, "agents[" + std::to_string(i) + "]");
    const std::string path = "agent_constraints[" + p.name + "]";
    const json& c = member(constraints, p.name, "agent_constraints");
    if (is_short) {
      ClockAvailability clock;
      clock.zone_label = string_at(member(c, "timezone", path), path + ".timezone");
      try {
        clock.zone = ZoneOffset{int_at(member(c, "utc_offset", path), path + ".utc_offset")};
      } catch (const std::invalid_argument& e) {
        throw SchemaError(path + ".utc_offset", e.what());
      }
      clock.working = window_at(member(c, "working_hours", path), path + ".working_hours");
      if (const json* m = optional_member(c, "meal_break")) clock.meal = window_at(*m, path + ".meal_break");
      p.clock = clock;
      const std::string gpath = "agent_constraints_gmt[" + p.name + "]";
      const json& g = member(member(doc, "agent_constraints_gmt", "$"), p.name, "agent_constraints_gmt");
      if (const json* u = optional_member(g, "unavailable")) {
        array_at(*u, gpath + ".unavailable");
        for (std::size_t k = 0; k < u->size(); ++k) {
          const std::string upath = gpath + ".unavailable[" + std::to_string(k) + "]";
          const json& pair = (*u)[k];
          if (!pair.is_array() || pair.size() != 2) throw SchemaError(upath, "expected [begin, end]");
          p.unavailable_intervals.push_back(
              {text_at(pair[0], upath + "[0]", parse_instant), text_at(pair[1], upath + "[1]", parse_instant)});
        }
      }
    } else {
      p.working_days = text_at(member(c, "working_days", path), path + ".working_days", parse_working_days);
      if (const json* all = optional_member(doc, "agent_unavailable_dates")) {
        if (const json* dates = optional_member(*all, p.name)) {
          const std::string dpath = "agent_unavailable_dates[" + p.name + "]";
          array_at(*dates, dpath);
          for (std::size_t k = 0; k < dates->size(); ++k)
            p.unavailable_dates.push_back(text_at((*dates)[k], dpath + "[" + std::to_string(k) + "]", parse_date));
        }
      }
    }
    if (const json* b = optional_member(c, "break_between")) p.break_between = quantity_at(*b, path + ".break_between");
    if (const json* b = optional_member(c, "break_after")) {
      p.break_after = RawBreakAfter{
          quantity_at(member(*b, "max_consecutive", path + ".break_after"), path + ".break_after.max_consecutive"),
          quantity_at(member(*b, "rest", path + ".break_after"), path + ".break_after.rest")};
    }
    raw.participants.push_back(std::move(p));
  }
  std::sort(raw.participants.begin(), raw.participants.end(),
            [](const RawParticipant& a, const RawParticipant& b) { return a.label < b.label; });
  return raw;
}

ProblemInstance instance_from_metadata(const json& doc) {
  ProblemInstance inst = build_instance(parse_metadata(doc));

  // Redundant blocks must agree with the authoritative fields.
  const json& graph = member(doc, "dependency_graph", "$");
  if (!graph.is_object()) throw SchemaError("dependency_graph", "expected an object");
  const auto& tasks = inst.tasks();
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    std::vector<std::string> expected;
    for (auto p : inst.dependencies().predecessors(i)) expected.push_back(tasks[p].name);
    std::vector<std::string> actual;
    if (const json* pre = optional_member(graph, tasks[i].name)) {
      array_at(*pre, "dependency_graph[" + tasks[i].name + "]");
      for (const auto& n : *pre) actual.push_back(string_at(n, "dependency_graph[" + tasks[i].name + "]"));
    }
    std::sort(expected.begin(), expected.end());
    std::sort(actual.begin(), actual.end());
    if (expected != actual)
      throw ValidationError("dependency_graph[" + tasks[i].name + "]", "disagrees with dependencies");
  }

  if (inst.category() == Category::Short) {
    const json& gmt = member(doc, "agent_constraints_gmt", "$");
    for (const auto& p : inst.participants()) {
      const std::string gpath = "agent_constraints_gmt[" + p.name + "]";
      const json& g = member(gmt, p.name, "agent_constraints_gmt");
      auto windows = [&](const std::string& key) {
        std::vector<ClockWindow> out;
        if (const json* arr = optional_member(g, key)) {
          array_at(*arr, gpath + "." + key);
          for (std::size_t k = 0; k < arr->size(); ++k)
            out.push_back(window_at((*arr)[k], gpath + "." + key + "[" + std::to_string(k) + "]"));
        }
        return out;
      };
      if (windows("working_hours") != gmt_clock_image(p.clock->working, p.clock->zone))
        throw ValidationError(gpath + ".working_hours", "disagrees with the local working hours");
      const auto meal = p.clock->meal ? gmt_clock_image(*p.clock->meal, p.clock->zone) : std::vector<ClockWindow>{};
      if (windows("meal_break") != meal)
        throw ValidationError(gpath + ".meal_break", "disagrees with the local meal break");
    }
  }
  return inst;
}

} // namespace coplan
