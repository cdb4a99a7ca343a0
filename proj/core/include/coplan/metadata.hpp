#pragma once

// Structured metadata: the JSON object that carries every scheduling-relevant
// number of an instance. Concretized copies rename tasks and agents and record
// the renaming in "task_name_map" / "agent_name_map" (concrete -> generic).

#include "coplan/model.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

namespace coplan {

using Metadata = nlohmann::ordered_json;

/// Structural problem in a metadata document: missing key, wrong JSON type,
/// malformed time text. Distinct from ValidationError, which is about content.
class SchemaError : public std::runtime_error {
public:
  SchemaError(std::string path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

private:
  std::string path_;
};

Metadata metadata_of(const ProblemInstance& instance);

/// Parses the document into raw fields, resolving names through the name
/// maps. Throws SchemaError on structural problems.
RawInstance parse_metadata(const nlohmann::ordered_json& doc);

/// parse_metadata followed by build_instance, plus the consistency checks
/// between redundant blocks (dependency_graph vs dependencies,
/// agent_constraints_gmt vs agent_constraints).
ProblemInstance instance_from_metadata(const nlohmann::ordered_json& doc);

/// {"hours": n} / {"days": n}
nlohmann::ordered_json quantity_json(int value, TimeUnit unit);

} // namespace coplan
