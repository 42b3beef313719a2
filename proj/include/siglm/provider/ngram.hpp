#pragma once

#include <list>
#include <map>
#include <mutex>
#include <unordered_map>

#include "siglm/provider/predictor.hpp"

namespace siglm {

// Laplace-smoothed interpolated back-off n-gram over a byte-complete
// vocabulary. "order" is the maximum context length in tokens (order 2 looks
// at up to the two preceding tokens). With pseudo-mass m = smoothing * |V|,
//
//   P_0(t)        = (c_0(t) + smoothing) / (C_0 + m)
//   P_k(t | ctx)  = (c_k(ctx, t) + m * P_{k-1}(t | ctx')) / (C_k(ctx) + m)
//
// so a context unseen at level k reduces exactly to the level below, down to
// the smoothed unigram. Contexts are left-padded with the BOS sentinel both
// at train and at query time.
class NgramPredictor : public TokenPredictor {
 public:
  struct TrainOptions {
    int order = 2;
    double smoothing = 0.1;
    // Vocabulary: 256 byte tokens plus up to (max_vocab - 256) induced word
    // tokens (space-prefixed and bare alphabetic runs).
    size_t max_vocab = 2048;
    uint64_t min_token_count = 4;
  };

  static std::shared_ptr<NgramPredictor> train(std::string_view corpus,
                                               const TrainOptions& opts);

  // SLPM container: magic "SLPM", version u16, then the body (order,
  // smoothing, vocabulary table, count tables). model_id is the SHA-256 of
  // the body, so it survives any serialize/deserialize round trip.
  std::vector<uint8_t> serialize() const;
  static std::shared_ptr<NgramPredictor> deserialize(std::span<const uint8_t> data);
  void save(const std::string& path) const;
  static std::shared_ptr<NgramPredictor> load(const std::string& path);

  const std::vector<std::string>& vocabulary() const override { return vocab_; }
  size_t context_window() const override { return static_cast<size_t>(order_); }
  std::string model_id() const override { return model_id_; }

  std::vector<double> distribution(std::span<const TokenId> context) const override;
  std::shared_ptr<const RankedVocabulary> ranking(
      std::span<const TokenId> context) const override;

  int order() const { return order_; }
  double smoothing() const { return smoothing_; }

 private:
  NgramPredictor() = default;
  void finalize();  // builds base distribution, ranking, model id

  struct ContextCounts {
    std::vector<std::pair<TokenId, uint64_t>> counts;  // sorted by token id
    uint64_t total = 0;
  };

  static std::string pack_key(std::span<const TokenId> ids);

  // Longest context suffix with training mass; the distribution depends only
  // on this, which makes it the ranking cache key.
  std::string effective_key(std::span<const TokenId> context) const;

  int order_ = 2;
  double smoothing_ = 0.1;
  std::vector<std::string> vocab_;
  std::vector<uint64_t> unigram_;
  uint64_t unigram_total_ = 0;
  // levels_[k-1] holds contexts of length k, keyed by packed ids.
  std::vector<std::unordered_map<std::string, ContextCounts>> levels_;

  std::vector<double> base_;  // smoothed unigram distribution
  std::shared_ptr<const RankedVocabulary> base_ranking_;
  std::vector<uint8_t> body_cache_;  // serialized body; model_id hashes this
  std::string model_id_;

  // LRU ranking cache keyed by effective context.
  struct CacheEntry {
    std::shared_ptr<const RankedVocabulary> ranking;
    std::list<std::string>::iterator lru_it;
  };
  static constexpr size_t kCacheCapacity = 4096;
  mutable std::mutex cache_mu_;
  mutable std::unordered_map<std::string, CacheEntry> cache_;
  mutable std::list<std::string> lru_;
};

}  // namespace siglm
