#pragma once

#include "coplan/metadata.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace coplan {

/// One benchmark row, serialized as a JSONL line:
/// {id, category, domain, dependency_type, seed, dialogue, question, metadata, answer}.
struct InstanceRecord {
  std::string id;
  Category category = Category::Short;
  std::string domain;
  DependencyType dependency_type = DependencyType::Fork;
  std::uint64_t seed = 0;
  std::string dialogue;
  std::string question;
  Metadata metadata;
  std::string answer;

  bool operator==(const InstanceRecord&) const = default;
};

nlohmann::ordered_json to_json(const InstanceRecord& r);
InstanceRecord record_from_json(const nlohmann::ordered_json& j);

/// Rebuilds the instance from the record's metadata; the record's domain and
/// seed are carried over.
ProblemInstance instance_of(const InstanceRecord& r);

/// Reads one JSON value per non-empty line. Errors carry the line number.
std::vector<nlohmann::ordered_json> read_jsonl(const std::filesystem::path& path);
void write_jsonl(const std::filesystem::path& path, const std::vector<nlohmann::ordered_json>& rows);

std::vector<InstanceRecord> read_records(const std::filesystem::path& path);
void write_records(const std::filesystem::path& path, const std::vector<InstanceRecord>& records);

} // namespace coplan
