#pragma once

#include <string>

#include "siglm/provider/chat.hpp"

namespace siglm {

struct RemoteConfig {
  std::string endpoint;     // scheme://host[:port]
  std::string api_key_env;  // name of the env var holding the bearer token; "" = none
  std::string model;
  double timeout_seconds = 30.0;
  int max_attempts = 3;
  int initial_backoff_ms = 200;
};

// Chat-completions-style HTTP provider. One POST per chat() with bounded
// exponential retry; never on the offline acceptance path.
class RemoteProvider : public ChatProvider {
 public:
  explicit RemoteProvider(RemoteConfig config);

  std::string chat(const ChatRequest& request) override;

 private:
  RemoteConfig config_;
};

}  // namespace siglm
