#pragma once

#include "coplan/temporal.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace coplan {

/// Zone label -> fixed offset lookup ("CET" is always GMT+1). Labels are
/// matched case-sensitively, as they appear in dialogue text.
class ZoneTable {
public:
  /// AEST=+10, NZST=+12, CET=+1, EST=-5, PST=-8, UTC=0, GMT=0.
  static const ZoneTable& builtin();

  /// Reads a JSON object {"LABEL": hours, ...}.
  static ZoneTable load(const std::filesystem::path& path);

  void add(std::string label, ZoneOffset offset);
  std::optional<ZoneOffset> find(std::string_view label) const;
  ZoneOffset at(std::string_view label) const;

  std::vector<std::string> labels() const;

  static bool is_gmt_alias(std::string_view label) { return label == "GMT" || label == "UTC"; }

private:
  std::map<std::string, ZoneOffset, std::less<>> offsets_;
};

} // namespace coplan
