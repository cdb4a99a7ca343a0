#pragma once

#include "coplan/metadata.hpp"
#include "coplan/record.hpp"
#include "coplan/schedule.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace coplan {

struct IntRange {
  int min = 0;
  int max = 0;
};

/// Sampling knobs for prototype generation. Numeric ranges are in the
/// category's unit (hours or days) unless named otherwise.
struct GenerationConfig {
  Category category = Category::Short;
  std::size_t count = 300;
  std::uint64_t seed = 0;

  /// Relative weights for fork, chain, join. Equal weights assign types by
  /// index modulo 3.
  std::array<double, 3> dependency_mix{1.0, 1.0, 1.0};

  IntRange duration{1, 3};
  double p_break_between = 0.5;
  IntRange break_between{1, 3};
  double p_break_after = 0.5;
  IntRange break_after_cap{2, 4};
  IntRange break_after_rest{1, 1};

  // Short category.
  std::vector<std::string> zones{"AEST", "NZST", "CET", "EST", "PST", "UTC", "GMT"};
  IntRange window_start_hour{7, 11};
  IntRange window_length_hours{8, 9};
  double p_meal_break = 1.0;
  IntRange meal_length_hours{1, 2};
  double p_unavailable_interval = 0.0;

  // Long category.
  double p_weekdays_only = 0.5;
  double p_unavailable_date = 0.5;

  DayDate first_start_date = parse_date("2010-01-01");
  DayDate last_start_date = parse_date("2024-12-31");

  std::vector<std::string> domains{"Computer Science",
                                   "Business Administration",
                                   "Mechanical Engineering",
                                   "Biology",
                                   "Economics",
                                   "Psychology",
                                   "Political Science",
                                   "Electrical Engineering",
                                   "Communications/Media Studies",
                                   "Nursing/Health Sciences"};

  std::size_t max_retries = 1000;

  /// Defaults for a category: 1-3 h or 1-3 d tasks, break-between 1-3 h or
  /// 1-2 d, break-after cap 2-4 h or 2-3 d with a rest of 1 unit.
  static GenerationConfig defaults(Category category);

  /// Throws std::invalid_argument on an unusable config.
  void validate() const;
};

struct Prototype {
  ProblemInstance instance;
  std::string dialogue;
  std::string question;
  Metadata metadata;
  Answer answer;
  Schedule witness;
};

/// Rejection sampling found no feasible instance within max_retries draws.
class GenerationExhausted : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Dependency type assigned to `index`. With an even mix this is
/// kDependencyTypes[index % 3]; otherwise quotas follow the weights over
/// `config.count` and are interleaved deterministically.
DependencyType dependency_type_for(const GenerationConfig& config, std::size_t index);

/// Deterministic in (config, index): each index draws from its own generator
/// seeded from (seed, category, index).
Prototype generate_prototype(const GenerationConfig& config, std::size_t index);

/// "short-0007", "long-0120".
std::string record_id(Category category, std::size_t index);

InstanceRecord to_record(const Prototype& prototype, const std::string& id, std::uint64_t seed);

/// Generates indices [0, config.count) on up to `threads` workers and returns
/// them in index order.
std::vector<InstanceRecord> generate_batch(const GenerationConfig& config, unsigned threads = 1);

} // namespace coplan
