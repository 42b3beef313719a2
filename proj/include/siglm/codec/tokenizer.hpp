#pragma once

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "siglm/provider/predictor.hpp"

namespace siglm {

// Greedy longest-match tokenizer over a byte-complete vocabulary. Because all
// 256 single-byte tokens are present, any byte string tokenizes, and the
// concatenation of token byte strings reproduces the input exactly.
class Tokenizer {
 public:
  explicit Tokenizer(const std::vector<std::string>& vocabulary);

  std::vector<TokenId> tokenize(std::string_view text) const;

  // Inverse: concatenation of the tokens' byte strings.
  std::string detokenize(std::span<const TokenId> tokens) const;

 private:
  struct SvHash {
    using is_transparent = void;
    size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
  };
  struct SvEq {
    using is_transparent = void;
    bool operator()(std::string_view a, std::string_view b) const { return a == b; }
  };

  const std::vector<std::string>& vocab_;
  std::unordered_map<std::string_view, TokenId, SvHash, SvEq> lookup_;
  size_t max_len_ = 1;
};

}  // namespace siglm
