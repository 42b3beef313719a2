#include "siglm/provider/predictor.hpp"

#include <algorithm>
#include <numeric>

namespace siglm {

RankedVocabulary RankedVocabulary::from_distribution(std::span<const double> probs) {
  RankedVocabulary rv;
  rv.by_rank.resize(probs.size());
  std::iota(rv.by_rank.begin(), rv.by_rank.end(), 0u);
  std::sort(rv.by_rank.begin(), rv.by_rank.end(), [&](TokenId a, TokenId b) {
    if (probs[a] != probs[b]) return probs[a] > probs[b];
    return a < b;
  });
  rv.rank_of.resize(probs.size());
  for (uint32_t r = 0; r < rv.by_rank.size(); ++r) rv.rank_of[rv.by_rank[r]] = r;
  return rv;
}

std::shared_ptr<const RankedVocabulary> TokenPredictor::ranking(
    std::span<const TokenId> context) const {
  const std::vector<double> probs = distribution(context);
  return std::make_shared<RankedVocabulary>(RankedVocabulary::from_distribution(probs));
}

std::shared_ptr<const RankedVocabulary> next_token_ranking(
    std::span<const TokenId> context, const TokenPredictor& predictor) {
  return predictor.ranking(context);
}

std::vector<std::string> byte_vocabulary() {
  std::vector<std::string> vocab(256);
  for (int b = 0; b < 256; ++b) vocab[b] = std::string(1, static_cast<char>(b));
  return vocab;
}

}  // namespace siglm
