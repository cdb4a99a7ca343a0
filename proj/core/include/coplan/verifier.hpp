#pragma once

#include "coplan/metadata.hpp"
#include "coplan/record.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coplan {

struct FieldDiff {
  std::string path; ///< e.g. "tasks[Task A].duration.hours"
  std::string prototype;
  std::string candidate;

  bool operator==(const FieldDiff&) const = default;
};

struct NameMapIssue {
  std::string side; ///< "prototype" or "candidate"
  std::string map;  ///< "task_name_map" or "agent_name_map"
  std::string kind; ///< "missing", "duplicate" or "unused"
  std::string name;

  bool operator==(const NameMapIssue&) const = default;
};

struct CheckReport {
  std::vector<FieldDiff> diffs;
  std::vector<NameMapIssue> name_map_issues;
  /// Set when either document fails to parse; diffs are then not computed.
  std::optional<std::string> schema_error;

  bool passed() const { return !schema_error && diffs.empty() && name_map_issues.empty(); }
};

/// Symbolic consistency check. Both documents are rewritten onto generic
/// labels through their own name maps; display names and the scenario title
/// are dropped; everything else must match value for value.
CheckReport hard_check(const Metadata& prototype, const Metadata& candidate);

nlohmann::ordered_json to_json(const CheckReport& report);

struct RecheckResult {
  bool passed = false;
  std::string expected; ///< recomputed answer, empty when none exists
  std::string stored;
  std::string reason; ///< why it failed
};

/// Re-solves the record's metadata and compares with its stored answer.
RecheckResult recheck_answer(const InstanceRecord& record);

} // namespace coplan
