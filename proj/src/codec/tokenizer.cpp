#include "siglm/codec/tokenizer.hpp"

#include <stdexcept>

namespace siglm {

Tokenizer::Tokenizer(const std::vector<std::string>& vocabulary) : vocab_(vocabulary) {
  lookup_.reserve(vocab_.size());
  bool bytes_present[256] = {};
  for (TokenId id = 0; id < vocab_.size(); ++id) {
    const std::string& tok = vocab_[id];
    if (tok.empty()) throw std::invalid_argument("vocabulary token must be non-empty");
    if (tok.size() == 1) bytes_present[static_cast<uint8_t>(tok[0])] = true;
    max_len_ = std::max(max_len_, tok.size());
    lookup_.emplace(std::string_view(tok), id);
  }
  for (int b = 0; b < 256; ++b) {
    if (!bytes_present[b])
      throw std::invalid_argument("vocabulary must contain all 256 byte tokens");
  }
}

std::vector<TokenId> Tokenizer::tokenize(std::string_view text) const {
  std::vector<TokenId> out;
  out.reserve(text.size() / 2 + 1);
  size_t i = 0;
  while (i < text.size()) {
    const size_t cap = std::min(max_len_, text.size() - i);
    TokenId id = 0;
    size_t matched = 0;
    for (size_t len = cap; len >= 1; --len) {
      auto it = lookup_.find(text.substr(i, len));
      if (it != lookup_.end()) {
        id = it->second;
        matched = len;
        break;
      }
    }
    // matched >= 1 always: the single byte is in-vocabulary.
    out.push_back(id);
    i += matched;
  }
  return out;
}

std::string Tokenizer::detokenize(std::span<const TokenId> tokens) const {
  std::string out;
  for (TokenId id : tokens) {
    if (id >= vocab_.size()) throw std::invalid_argument("token id out of range");
    out += vocab_[id];
  }
  return out;
}

}  // namespace siglm
