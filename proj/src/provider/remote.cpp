#include "siglm/provider/remote.hpp"

#include <chrono>
#include <cstdlib>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "siglm/errors.hpp"
#include "siglm/util.hpp"

namespace siglm {

RemoteProvider::RemoteProvider(RemoteConfig config) : config_(std::move(config)) {
  if (config_.endpoint.empty()) throw ConfigError("remote provider needs an endpoint");
  if (config_.model.empty()) throw ConfigError("remote provider needs a model name");
}

std::string RemoteProvider::chat(const ChatRequest& request) {
  request.validate();

  nlohmann::json body;
  body["model"] = config_.model;
  body["temperature"] = request.temperature;
  body["max_tokens"] = request.max_tokens;
  nlohmann::json messages = nlohmann::json::array();
  for (const ChatMessage& m : request.messages) {
    nlohmann::json msg;
    msg["role"] = role_name(m.role);
    if (m.attachments.empty()) {
      msg["content"] = m.text;
    } else {
      nlohmann::json parts = nlohmann::json::array();
      parts.push_back({{"type", "text"}, {"text", m.text}});
      for (const Attachment& att : m.attachments) {
        const std::string url = "data:" + att.media_type + ";base64," +
                                base64_encode(std::span<const uint8_t>(att.data));
        parts.push_back({{"type", "image_url"}, {"image_url", {{"url", url}}}});
      }
      msg["content"] = parts;
    }
    messages.push_back(msg);
  }
  body["messages"] = messages;

  httplib::Client client(config_.endpoint);
  client.set_connection_timeout(std::chrono::milliseconds(
      static_cast<int>(config_.timeout_seconds * 1000)));
  client.set_read_timeout(std::chrono::milliseconds(
      static_cast<int>(config_.timeout_seconds * 1000)));
  httplib::Headers headers;
  if (!config_.api_key_env.empty()) {
    const char* key = std::getenv(config_.api_key_env.c_str());
    if (key != nullptr && key[0] != '\0') {
      headers.emplace("Authorization", std::string("Bearer ") + key);
    }
  }

  const std::string payload = body.dump();
  std::string last_error = "no attempt made";
  int backoff_ms = config_.initial_backoff_ms;
  for (int attempt = 0; attempt < config_.max_attempts; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(std::chrono::milliseconds(backoff_ms));
      backoff_ms *= 2;
    }
    auto res = client.Post("/v1/chat/completions", headers, payload, "application/json");
    if (!res) {
      last_error = httplib::to_string(res.error());
      continue;
    }
    if (res->status < 200 || res->status >= 300) {
      last_error = "http status " + std::to_string(res->status);
      continue;
    }
    try {
      const nlohmann::json reply = nlohmann::json::parse(res->body);
      return reply.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      last_error = std::string("malformed reply: ") + e.what();
    }
  }
  throw RemoteUnavailable("remote chat failed after " +
                          std::to_string(config_.max_attempts) +
                          " attempts: " + last_error);
}

}  // namespace siglm
