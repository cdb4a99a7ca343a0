#include "coplan/client.hpp"

#include <httplib.h>
#include <nlohmann/json.hpp>

#include <cstdlib>

namespace coplan {

HttpClientConfig HttpClientConfig::from_env() {
  auto env = [](const char* name) {
    const char* v = std::getenv(name);
    return v ? std::string(v) : std::string();
  };
  HttpClientConfig c;
  c.endpoint = env("COPLAN_ENDPOINT");
  c.api_key = env("COPLAN_API_KEY");
  c.model = env("COPLAN_MODEL");
  return c;
}

HttpTextClient::HttpTextClient(HttpClientConfig config) : config_(std::move(config)) {
  const auto scheme = config_.endpoint.find("://");
  if (scheme == std::string::npos)
    throw std::invalid_argument("endpoint must be an absolute URL: '" + config_.endpoint + "'");
  const auto slash = config_.endpoint.find('/', scheme + 3);
  base_ = config_.endpoint.substr(0, slash);
  path_ = slash == std::string::npos ? "/" : config_.endpoint.substr(slash);
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
  if (config_.endpoint.rfind("https://", 0) == 0) throw std::invalid_argument("built without TLS support; use http://");
#endif
}

GenerationResponse HttpTextClient::generate(const GenerationRequest& request) {
  httplib::Client http(base_);
  http.set_connection_timeout(config_.timeout);
  http.set_read_timeout(config_.timeout);
  http.set_write_timeout(config_.timeout);
  httplib::Headers headers;
  if (!config_.api_key.empty()) headers.emplace("Authorization", "Bearer " + config_.api_key);

  nlohmann::json body{{"messages", nlohmann::json::array({{{"role", "user"}, {"content", request.prompt}}})},
                      {"temperature", request.temperature},
                      {"max_tokens", request.max_tokens}};
  if (!config_.model.empty()) body["model"] = config_.model;

  auto result = http.Post(path_, headers, body.dump(), "application/json");
  if (!result) throw TransientError("request failed: " + httplib::to_string(result.error()));
  if (result->status == 429 || result->status >= 500) throw TransientError("HTTP " + std::to_string(result->status));
  if (result->status != 200) throw PermanentError("HTTP " + std::to_string(result->status) + ": " + result->body);

  nlohmann::json reply;
  try {
    reply = nlohmann::json::parse(result->body);
  } catch (const nlohmann::json::parse_error& e) {
    throw PermanentError(std::string("response is not JSON: ") + e.what());
  }
  GenerationResponse out;
  try {
    out.text = reply.at("choices").at(0).at("message").at("content").get<std::string>();
  } catch (const nlohmann::json::exception&) {
    throw PermanentError("response has no choices[0].message.content");
  }
  if (auto usage = reply.find("usage"); usage != reply.end() && usage->is_object()) {
    if (usage->contains("prompt_tokens")) out.prompt_tokens = (*usage)["prompt_tokens"].get<long>();
    if (usage->contains("completion_tokens")) out.output_tokens = (*usage)["completion_tokens"].get<long>();
  }
  return out;
}

} // namespace coplan
