#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>

namespace coplan {

struct GenerationRequest {
  std::string prompt;
  double temperature = 0.0;
  int max_tokens = 4096;
};

struct GenerationResponse {
  std::string text;
  std::optional<long> prompt_tokens;
  std::optional<long> output_tokens;
};

/// Worth retrying: timeouts, dropped connections, HTTP 429 and 5xx.
class TransientError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Not worth retrying: bad credentials, malformed requests or responses.
class PermanentError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Anything that turns a prompt into text. Implementations must be safe to
/// call from several threads at once.
class TextGenerationClient {
public:
  virtual ~TextGenerationClient() = default;
  virtual GenerationResponse generate(const GenerationRequest& request) = 0;
};

struct HttpClientConfig {
  /// Full URL of an OpenAI-compatible chat completions route, e.g.
  /// "http://localhost:8000/v1/chat/completions".
  std::string endpoint;
  std::string api_key;
  std::string model;
  std::chrono::seconds timeout{120};

  /// Reads COPLAN_ENDPOINT, COPLAN_API_KEY and COPLAN_MODEL.
  static HttpClientConfig from_env();
};

class HttpTextClient final : public TextGenerationClient {
public:
  explicit HttpTextClient(HttpClientConfig config);
  GenerationResponse generate(const GenerationRequest& request) override;

private:
  HttpClientConfig config_;
  std::string base_; ///< scheme://host[:port]
  std::string path_;
};

} // namespace coplan
