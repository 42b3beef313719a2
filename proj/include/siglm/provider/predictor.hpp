#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace siglm {

using TokenId = uint32_t;

// Probability-sorted view of the vocabulary for one context.
// by_rank[r] is the token at rank r (rank 0 = most probable); rank_of is the
// inverse permutation. Ties in probability break by ascending token id so the
// order is total and shared by encoder and decoder.
struct RankedVocabulary {
  std::vector<TokenId> by_rank;
  std::vector<uint32_t> rank_of;

  static RankedVocabulary from_distribution(std::span<const double> probs);
};

class TokenPredictor {
 public:
  virtual ~TokenPredictor() = default;

  virtual const std::vector<std::string>& vocabulary() const = 0;
  virtual size_t context_window() const = 0;
  // Hex digest identifying the exact predictor state. Identical
  // (model_id, context) pairs yield identical distributions anywhere.
  virtual std::string model_id() const = 0;

  // Sentinel id used to left-pad contexts shorter than the requested length.
  // Valid inside contexts, never predicted.
  TokenId bos_id() const { return static_cast<TokenId>(vocabulary().size()); }

  // Probability over the vocabulary; sums to 1 within 1e-9 for any context.
  virtual std::vector<double> distribution(std::span<const TokenId> context) const = 0;

  // Deterministic ranking for a context. Default ranks distribution();
  // implementations may cache.
  virtual std::shared_ptr<const RankedVocabulary> ranking(
      std::span<const TokenId> context) const;
};

std::shared_ptr<const RankedVocabulary> next_token_ranking(
    std::span<const TokenId> context, const TokenPredictor& predictor);

// Vocabulary of exactly the 256 single-byte tokens, in byte order.
std::vector<std::string> byte_vocabulary();

}  // namespace siglm
