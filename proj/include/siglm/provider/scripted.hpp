#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "siglm/provider/chat.hpp"

namespace siglm {

// Deterministic offline chat provider driven by an ordered fixture script.
// Each call consumes the first not-yet-consumed entry whose matcher substring
// occurs in the request text; when nothing matches the exhaustion policy
// decides between failing fast and repeating the last response.
class ScriptedProvider : public ChatProvider {
 public:
  enum class Exhaustion { kError, kRepeatLast };

  struct Entry {
    std::string match;     // substring matcher against ChatRequest::joined_text()
    std::string response;  // canned reply
  };

  explicit ScriptedProvider(std::vector<Entry> entries,
                            Exhaustion policy = Exhaustion::kError);

  // Fixture file: JSON array of {"match": ..., "response": ...} objects,
  // optionally wrapped as {"exhaustion": "error"|"repeat-last", "entries": [...]}.
  static ScriptedProvider from_json_file(const std::string& path);

  std::string chat(const ChatRequest& request) override;

  int calls() const;

 private:
  mutable std::mutex mu_;
  std::vector<Entry> entries_;
  std::vector<bool> consumed_;
  Exhaustion policy_;
  std::optional<std::string> last_;
  int calls_ = 0;
};

}  // namespace siglm
