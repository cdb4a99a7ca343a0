#pragma once

#include "coplan/record.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace coplan {

/// One model completion. Several samples of the same instance carry distinct
/// `sample` indices.
struct Prediction {
  std::string id;
  int sample = 0;
  std::string text;
  std::optional<long> prompt_tokens;
  std::optional<long> output_tokens;
  /// Set when the request itself failed; the prediction scores as unparseable.
  std::optional<std::string> error;
};

nlohmann::ordered_json to_json(const Prediction& p);
Prediction prediction_from_json(const nlohmann::ordered_json& j);
std::vector<Prediction> read_predictions(const std::filesystem::path& path);
void write_predictions(const std::filesystem::path& path, const std::vector<Prediction>& predictions);

struct Tally {
  long total = 0;
  long correct = 0;
  long unparseable = 0;

  double accuracy() const {
    return total == 0 ? 0.0 : 100.0 * static_cast<double>(correct) / static_cast<double>(total);
  }
  double error_rate() const { return total == 0 ? 0.0 : 100.0 - accuracy(); }
};

struct LengthSummary {
  long count = 0;
  double median = 0;
  double q1 = 0;
  double q3 = 0;
};

struct EvalReport {
  std::string mode; ///< "greedy" or "sampled-N"
  Tally overall;
  std::map<std::string, Tally> by_category;                          ///< "short", "long"
  std::map<std::string, std::map<std::string, Tally>> by_dependency; ///< category -> type
  std::map<std::string, Tally> by_domain;
  /// A scored item counts once for every zone label its instance mentions.
  std::map<std::string, Tally> by_zone;
  LengthSummary correct_lengths;
  LengthSummary incorrect_lengths;
  long missing = 0; ///< gold ids without any prediction
};

/// Raised for duplicate (id, sample) pairs and ids absent from the gold set.
class ScoreError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Exact-match scoring after extraction. Every prediction is one scored item;
/// a gold record with no prediction is one unparseable item. The mode is
/// "greedy" when each id has one sample and "sampled-N" otherwise.
EvalReport score(const std::vector<Prediction>& predictions, const std::vector<InstanceRecord>& gold);

nlohmann::ordered_json to_json(const EvalReport& report);
/// Short/Long/Overall table followed by the breakdown tables.
std::string to_markdown(const EvalReport& report);

/// Quartiles by linear interpolation between order statistics.
LengthSummary summarize_lengths(std::vector<long> values);

} // namespace coplan
