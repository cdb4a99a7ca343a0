#pragma once

#include "coplan/client.hpp"
#include "coplan/record.hpp"
#include "coplan/score.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <optional>
#include <vector>

namespace coplan {

enum class PromptTemplate { Plain, ChainOfThought };

PromptTemplate parse_prompt_template(std::string_view text); ///< "plain" or "cot"
std::string build_prompt(const InstanceRecord& record, PromptTemplate tmpl);

struct RunConfig {
  PromptTemplate prompt = PromptTemplate::ChainOfThought;
  /// 1 runs greedy decoding at temperature 0; more draws that many samples
  /// per instance at `sample_temperature`.
  int samples = 1;
  double sample_temperature = 1.0;
  int max_tokens = 4096;
  int max_attempts = 4;
  std::chrono::milliseconds initial_backoff{500};
  double backoff_factor = 2.0;
  unsigned concurrency = 4;
  /// Every attempt is appended here as one JSON line when set.
  std::optional<std::filesystem::path> transcript;
  /// Injected for tests; defaults to std::this_thread::sleep_for.
  std::function<void(std::chrono::milliseconds)> sleep;
};

/// One prediction per (instance, sample), in input order. A request that
/// still fails after the retry budget yields a prediction with `error` set.
std::vector<Prediction> run_model(const std::vector<InstanceRecord>& instances, TextGenerationClient& client,
                                  const RunConfig& config);

} // namespace coplan
