#include "siglm/provider/scripted.hpp"

#include <json.hpp>

#include "siglm/errors.hpp"
#include "siglm/util.hpp"

namespace siglm {

ScriptedProvider::ScriptedProvider(std::vector<Entry> entries, Exhaustion policy)
    : entries_(std::move(entries)), consumed_(entries_.size(), false), policy_(policy) {}

ScriptedProvider ScriptedProvider::from_json_file(const std::string& path) {
  const nlohmann::json doc = nlohmann::json::parse(read_file(path));
  Exhaustion policy = Exhaustion::kError;
  const nlohmann::json* list = &doc;
  if (doc.is_object()) {
    if (doc.contains("exhaustion") && doc["exhaustion"] == "repeat-last")
      policy = Exhaustion::kRepeatLast;
    list = &doc.at("entries");
  }
  std::vector<Entry> entries;
  for (const auto& item : *list) {
    entries.push_back({item.at("match").get<std::string>(),
                       item.at("response").get<std::string>()});
  }
  return ScriptedProvider(std::move(entries), policy);
}

std::string ScriptedProvider::chat(const ChatRequest& request) {
  request.validate();
  const std::string text = request.joined_text();
  std::lock_guard<std::mutex> lock(mu_);
  ++calls_;
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (consumed_[i]) continue;
    if (text.find(entries_[i].match) != std::string::npos) {
      consumed_[i] = true;
      last_ = entries_[i].response;
      return entries_[i].response;
    }
  }
  if (policy_ == Exhaustion::kRepeatLast && last_) return *last_;
  throw FixtureExhausted("no scripted entry matches the request");
}

int ScriptedProvider::calls() const {
  std::lock_guard<std::mutex> lock(mu_);
  return calls_;
}

}  // namespace siglm
