#include "coplan/runner.hpp"

#include <atomic>
#include <fstream>
#include <mutex>
#include <thread>

namespace coplan {

PromptTemplate parse_prompt_template(std::string_view text) {
  if (text == "plain") return PromptTemplate::Plain;
  if (text == "cot") return PromptTemplate::ChainOfThought;
  throw std::invalid_argument("unknown prompt template '" + std::string(text) + "' (expected plain or cot)");
}

std::string build_prompt(const InstanceRecord& record, PromptTemplate tmpl) {
  std::string prompt = record.dialogue;
  if (!prompt.empty() && prompt.back() != '\n') prompt += '\n';
  prompt += '\n';
  prompt += record.question;
  if (tmpl == PromptTemplate::ChainOfThought)
    prompt += "\nLet's think step by step. End your response with the final answer written as \\boxed{...}.";
  else
    prompt += "\nRespond with the final answer only.";
  return prompt;
}

std::vector<Prediction> run_model(const std::vector<InstanceRecord>& instances, TextGenerationClient& client,
                                  const RunConfig& config) {
  if (config.samples < 1) throw std::invalid_argument("samples must be at least 1");
  if (config.max_attempts < 1) throw std::invalid_argument("max_attempts must be at least 1");

  const std::size_t samples = static_cast<std::size_t>(config.samples);
  const std::size_t jobs = instances.size() * samples;
  std::vector<Prediction> out(jobs);

  std::ofstream transcript;
  if (config.transcript) {
    transcript.open(*config.transcript, std::ios::app);
    if (!transcript) throw std::runtime_error("cannot write transcript " + config.transcript->string());
  }
  std::mutex transcript_lock;
  auto log = [&](const nlohmann::ordered_json& line) {
    if (!transcript.is_open()) return;
    std::lock_guard lock(transcript_lock);
    transcript << line.dump() << '\n' << std::flush;
  };
  auto sleep = config.sleep ? config.sleep : [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t job = next++; job < jobs; job = next++) {
      const InstanceRecord& record = instances[job / samples];
      Prediction p;
      p.id = record.id;
      p.sample = static_cast<int>(job % samples);
      GenerationRequest request{build_prompt(record, config.prompt), samples == 1 ? 0.0 : config.sample_temperature,
                                config.max_tokens};
      auto backoff = config.initial_backoff;
      for (int attempt = 1; attempt <= config.max_attempts; ++attempt) {
        nlohmann::ordered_json line{{"id", p.id},
                                    {"sample", p.sample},
                                    {"attempt", attempt},
                                    {"prompt", request.prompt},
                                    {"temperature", request.temperature}};
        try {
          GenerationResponse r = client.generate(request);
          p.text = std::move(r.text);
          p.prompt_tokens = r.prompt_tokens;
          p.output_tokens = r.output_tokens;
          p.error.reset();
          line["response"] = p.text;
          log(line);
          break;
        } catch (const TransientError& e) {
          p.error = e.what();
          line["error"] = e.what();
          log(line);
          if (attempt < config.max_attempts) {
            sleep(backoff);
            backoff = std::chrono::milliseconds(
                static_cast<long long>(static_cast<double>(backoff.count()) * config.backoff_factor));
          }
        } catch (const std::exception& e) {
          p.error = e.what();
          line["error"] = e.what();
          log(line);
          break;
        }
      }
      out[job] = std::move(p);
    }
  };

  const unsigned workers =
      std::max(1u, std::min<unsigned>(config.concurrency, static_cast<unsigned>(std::max<std::size_t>(jobs, 1))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

} // namespace coplan
