#include "coplan/zones.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace coplan {

const ZoneTable& ZoneTable::builtin() {
  static const ZoneTable table = [] {
    ZoneTable t;
    t.add("AEST", ZoneOffset{10});
    t.add("NZST", ZoneOffset{12});
    t.add("CET", ZoneOffset{1});
    t.add("EST", ZoneOffset{-5});
    t.add("PST", ZoneOffset{-8});
    t.add("UTC", ZoneOffset{0});
    t.add("GMT", ZoneOffset{0});
    return t;
  }();
  return table;
}

ZoneTable ZoneTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open zone table " + path.string());
  const auto doc = nlohmann::json::parse(in);
  if (!doc.is_object()) throw ParseError("zone table must be a JSON object");
  ZoneTable t;
  for (const auto& [label, hours] : doc.items()) {
    if (!hours.is_number_integer()) throw ParseError("zone offset for " + label + " must be an integer");
    t.add(label, ZoneOffset{hours.get<int>()});
  }
  return t;
}

void ZoneTable::add(std::string label, ZoneOffset offset) { offsets_.insert_or_assign(std::move(label), offset); }

std::optional<ZoneOffset> ZoneTable::find(std::string_view label) const {
  if (auto it = offsets_.find(label); it != offsets_.end()) return it->second;
  return std::nullopt;
}

ZoneOffset ZoneTable::at(std::string_view label) const {
  if (auto z = find(label)) return *z;
  throw std::out_of_range("unknown zone label '" + std::string(label) + "'");
}

std::vector<std::string> ZoneTable::labels() const {
  std::vector<std::string> out;
  for (const auto& [label, _] : offsets_) out.push_back(label);
  return out;
}

} // namespace coplan
