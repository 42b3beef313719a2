#include "siglm/provider/chat.hpp"

#include <stdexcept>

namespace siglm {

const char* role_name(Role role) {
  switch (role) {
    case Role::kSystem:
      return "system";
    case Role::kUser:
      return "user";
    case Role::kAssistant:
      return "assistant";
  }
  return "user";
}

void ChatRequest::validate() const {
  if (messages.empty()) throw std::invalid_argument("chat request has no messages");
  if (messages.front().role == Role::kAssistant)
    throw std::invalid_argument("conversation cannot start with an assistant message");
  for (const ChatMessage& m : messages) {
    if (m.role != Role::kUser && !m.attachments.empty())
      throw std::invalid_argument("attachments are only allowed on user messages");
  }
  if (temperature < 0.0) throw std::invalid_argument("temperature must be >= 0");
  if (max_tokens <= 0) throw std::invalid_argument("max_tokens must be positive");
}

std::string ChatRequest::joined_text() const {
  std::string out;
  for (const ChatMessage& m : messages) {
    if (!out.empty()) out.push_back('\n');
    out += m.text;
  }
  return out;
}

ChatRequest make_request(const std::string& system_text, const std::string& user_text) {
  ChatRequest req;
  req.messages.push_back({Role::kSystem, system_text, {}});
  req.messages.push_back({Role::kUser, user_text, {}});
  return req;
}

}  // namespace siglm
