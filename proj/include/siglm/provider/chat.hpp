#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace siglm {

enum class Role { kSystem, kUser, kAssistant };

const char* role_name(Role role);

struct Attachment {
  std::string media_type;  // e.g. "image/x-portable-graymap"
  std::vector<uint8_t> data;
};

struct ChatMessage {
  Role role = Role::kUser;
  std::string text;
  std::vector<Attachment> attachments;  // only allowed on user messages
};

struct ChatRequest {
  std::vector<ChatMessage> messages;
  double temperature = 0.0;
  int max_tokens = 1024;

  // Throws std::invalid_argument when a structural invariant is broken:
  // empty message list, assistant-first conversation, attachments on a
  // non-user message, negative temperature, non-positive max_tokens.
  void validate() const;

  // All message texts joined with newlines; scripted matchers run on this.
  std::string joined_text() const;
};

// Convenience builder for the common system+user shape.
ChatRequest make_request(const std::string& system_text, const std::string& user_text);

class ChatProvider {
 public:
  virtual ~ChatProvider() = default;
  virtual std::string chat(const ChatRequest& request) = 0;
};

}  // namespace siglm
