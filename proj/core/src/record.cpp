#include "coplan/record.hpp"

#include <fstream>

namespace coplan {

using json = nlohmann::ordered_json;

json to_json(const InstanceRecord& r) {
  return json{{"id", r.id},
              {"category", std::string(to_string(r.category))},
              {"domain", r.domain},
              {"dependency_type", std::string(to_string(r.dependency_type))},
              {"seed", r.seed},
              {"dialogue", r.dialogue},
              {"question", r.question},
              {"metadata", r.metadata},
              {"answer", r.answer}};
}

InstanceRecord record_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("$", "record must be a JSON object");
  auto field = [&](const char* key) -> const json& {
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(key, "missing");
    return *it;
  };
  auto text = [&](const char* key) {
    const json& v = field(key);
    if (!v.is_string()) throw SchemaError(key, "expected a string");
    return v.get<std::string>();
  };
  InstanceRecord r;
  r.id = text("id");
  try {
    r.category = parse_category(text("category"));
    r.dependency_type = parse_dependency_type(text("dependency_type"));
  } catch (const ParseError& e) {
    throw SchemaError(r.id, e.what());
  }
  if (auto it = j.find("domain"); it != j.end() && it->is_string()) r.domain = it->get<std::string>();
  if (auto it = j.find("seed"); it != j.end()) {
    if (!it->is_number_unsigned() && !it->is_number_integer()) throw SchemaError("seed", "expected an integer");
    r.seed = it->get<std::uint64_t>();
  }
  if (auto it = j.find("dialogue"); it != j.end() && it->is_string()) r.dialogue = it->get<std::string>();
  if (auto it = j.find("question"); it != j.end() && it->is_string()) r.question = it->get<std::string>();
  r.metadata = field("metadata");
  r.answer = text("answer");
  return r;
}

ProblemInstance instance_of(const InstanceRecord& r) {
  RawInstance raw = parse_metadata(r.metadata);
  raw.domain = r.domain;
  raw.seed = r.seed;
  ProblemInstance checked = instance_from_metadata(r.metadata);
  (void)checked;
  return build_instance(raw);
}

std::vector<json> read_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<json> rows;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      rows.push_back(json::parse(line));
    } catch (const json::parse_error& e) {
      throw ParseError(path.string() + ":" + std::to_string(n) + ": " + e.what());
    }
  }
  return rows;
}

void write_jsonl(const std::filesystem::path& path, const std::vector<json>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  for (const auto& row : rows) out << row.dump() << '\n';
}

std::vector<InstanceRecord> read_records(const std::filesystem::path& path) {
  std::vector<InstanceRecord> out;
  for (const auto& row : read_jsonl(path)) out.push_back(record_from_json(row));
  return out;
}

void write_records(const std::filesystem::path& path, const std::vector<InstanceRecord>& records) {
  std::vector<json> rows;
  rows.reserve(records.size());
  for (const auto& r : records) rows.push_back(to_json(r));
  write_jsonl(path, rows);
}

} // namespace coplan
