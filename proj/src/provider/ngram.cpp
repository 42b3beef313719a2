#include "siglm/provider/ngram.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

#include "siglm/codec/tokenizer.hpp"
#include "siglm/errors.hpp"
#include "siglm/util.hpp"

namespace siglm {

namespace {

constexpr char kMagic[4] = {'S', 'L', 'P', 'M'};
constexpr uint16_t kVersion = 1;

// Candidate word tokens: alphabetic runs of length 2..15, bare and with one
// leading space. The space-prefixed form carries most of the compression win
// on ordinary prose.
std::vector<std::string> induce_word_tokens(std::string_view corpus, size_t max_extra,
                                            uint64_t min_count) {
  std::unordered_map<std::string, uint64_t> counts;
  size_t i = 0;
  const size_t n = corpus.size();
  while (i < n) {
    if (std::isalpha(static_cast<unsigned char>(corpus[i]))) {
      size_t j = i;
      while (j < n && std::isalpha(static_cast<unsigned char>(corpus[j]))) ++j;
      const size_t run = j - i;
      if (run >= 2 && run <= 15) {
        counts[std::string(corpus.substr(i, run))]++;
        if (i > 0 && corpus[i - 1] == ' ')
          counts[std::string(corpus.substr(i - 1, run + 1))]++;
      }
      i = j;
    } else {
      ++i;
    }
  }
  std::vector<std::pair<std::string, uint64_t>> ranked(counts.begin(), counts.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::vector<std::string> out;
  for (const auto& [tok, cnt] : ranked) {
    if (out.size() >= max_extra) break;
    if (cnt < min_count) break;
    out.push_back(tok);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string NgramPredictor::pack_key(std::span<const TokenId> ids) {
  std::string key(ids.size() * 4, '\0');
  for (size_t i = 0; i < ids.size(); ++i) {
    std::memcpy(key.data() + i * 4, &ids[i], 4);
  }
  return key;
}

std::shared_ptr<NgramPredictor> NgramPredictor::train(std::string_view corpus,
                                                      const TrainOptions& opts) {
  if (corpus.empty()) throw std::invalid_argument("training corpus must be non-empty");
  if (opts.order < 1) throw std::invalid_argument("n-gram order must be >= 1");
  if (opts.smoothing <= 0.0) throw std::invalid_argument("smoothing must be positive");
  if (opts.max_vocab < 256) throw std::invalid_argument("max_vocab must be >= 256");

  auto model = std::shared_ptr<NgramPredictor>(new NgramPredictor());
  model->order_ = opts.order;
  model->smoothing_ = opts.smoothing;

  model->vocab_ = byte_vocabulary();
  for (std::string& tok :
       induce_word_tokens(corpus, opts.max_vocab - 256, opts.min_token_count)) {
    model->vocab_.push_back(std::move(tok));
  }

  const Tokenizer tokenizer(model->vocab_);
  const std::vector<TokenId> tokens = tokenizer.tokenize(corpus);
  const TokenId bos = model->bos_id();
  const int max_ctx = opts.order - 1;

  model->unigram_.assign(model->vocab_.size(), 0);
  std::vector<std::unordered_map<std::string, std::unordered_map<TokenId, uint64_t>>>
      raw(max_ctx);

  std::vector<TokenId> ctx;
  for (size_t i = 0; i < tokens.size(); ++i) {
    model->unigram_[tokens[i]]++;
    for (int k = 1; k <= max_ctx; ++k) {
      ctx.clear();
      for (int j = k; j >= 1; --j) {
        const long long p = static_cast<long long>(i) - j;
        ctx.push_back(p >= 0 ? tokens[static_cast<size_t>(p)] : bos);
      }
      raw[k - 1][pack_key(ctx)][tokens[i]]++;
    }
  }
  model->unigram_total_ = tokens.size();

  model->levels_.resize(max_ctx);
  for (int k = 0; k < max_ctx; ++k) {
    for (auto& [key, cmap] : raw[k]) {
      ContextCounts cc;
      cc.counts.assign(cmap.begin(), cmap.end());
      std::sort(cc.counts.begin(), cc.counts.end());
      for (const auto& [t, c] : cc.counts) cc.total += c;
      model->levels_[k].emplace(key, std::move(cc));
    }
  }

  model->finalize();
  return model;
}

void NgramPredictor::finalize() {
  const size_t v = vocab_.size();
  base_.assign(v, 0.0);
  const double denom = static_cast<double>(unigram_total_) + smoothing_ * static_cast<double>(v);
  for (size_t t = 0; t < v; ++t) {
    base_[t] = (static_cast<double>(unigram_[t]) + smoothing_) / denom;
  }
  base_ranking_ = std::make_shared<RankedVocabulary>(
      RankedVocabulary::from_distribution(base_));

  BinWriter w;
  w.u32(static_cast<uint32_t>(order_));
  w.f64(smoothing_);
  w.u32(static_cast<uint32_t>(vocab_.size()));
  for (const std::string& tok : vocab_) {
    w.u16(static_cast<uint16_t>(tok.size()));
    w.bytes(tok);
  }
  for (uint64_t c : unigram_) w.u64(c);
  w.u32(static_cast<uint32_t>(levels_.size()));
  for (const auto& level : levels_) {
    std::vector<const std::string*> keys;
    keys.reserve(level.size());
    for (const auto& [key, cc] : level) keys.push_back(&key);
    std::sort(keys.begin(), keys.end(),
              [](const std::string* a, const std::string* b) { return *a < *b; });
    w.u64(keys.size());
    for (const std::string* key : keys) {
      w.bytes(*key);
      const ContextCounts& cc = level.at(*key);
      w.u32(static_cast<uint32_t>(cc.counts.size()));
      for (const auto& [t, c] : cc.counts) {
        w.u32(t);
        w.u64(c);
      }
    }
  }
  body_cache_ = w.take();
  model_id_ = sha256_hex(body_cache_);
}

std::vector<uint8_t> NgramPredictor::serialize() const {
  BinWriter w;
  w.bytes(std::string_view(kMagic, 4));
  w.u16(kVersion);
  w.bytes(body_cache_);
  return w.take();
}

std::shared_ptr<NgramPredictor> NgramPredictor::deserialize(std::span<const uint8_t> data) {
  BinReader r(data);
  if (r.str(4) != std::string(kMagic, 4)) throw CorruptPayload("bad predictor magic");
  if (r.u16() != kVersion) throw CorruptPayload("unsupported predictor version");

  auto model = std::shared_ptr<NgramPredictor>(new NgramPredictor());
  model->order_ = static_cast<int>(r.u32());
  if (model->order_ < 1) throw CorruptPayload("invalid n-gram order");
  model->smoothing_ = r.f64();
  if (!(model->smoothing_ > 0.0)) throw CorruptPayload("invalid smoothing");
  const uint32_t v = r.u32();
  if (v < 256) throw CorruptPayload("vocabulary too small");
  model->vocab_.reserve(v);
  for (uint32_t i = 0; i < v; ++i) {
    const uint16_t len = r.u16();
    if (len == 0) throw CorruptPayload("empty vocabulary token");
    model->vocab_.push_back(r.str(len));
  }
  model->unigram_.resize(v);
  model->unigram_total_ = 0;
  for (uint32_t i = 0; i < v; ++i) {
    model->unigram_[i] = r.u64();
    model->unigram_total_ += model->unigram_[i];
  }
  const uint32_t nlevels = r.u32();
  if (nlevels != static_cast<uint32_t>(model->order_ - 1))
    throw CorruptPayload("level count mismatch");
  model->levels_.resize(nlevels);
  for (uint32_t k = 0; k < nlevels; ++k) {
    const uint64_t nctx = r.u64();
    for (uint64_t c = 0; c < nctx; ++c) {
      std::string key = r.str((k + 1) * 4);
      ContextCounts cc;
      const uint32_t entries = r.u32();
      cc.counts.reserve(entries);
      for (uint32_t e = 0; e < entries; ++e) {
        const TokenId t = r.u32();
        const uint64_t cnt = r.u64();
        if (t >= v) throw CorruptPayload("count entry token out of range");
        cc.counts.emplace_back(t, cnt);
        cc.total += cnt;
      }
      model->levels_[k].emplace(std::move(key), std::move(cc));
    }
  }
  model->finalize();
  return model;
}

void NgramPredictor::save(const std::string& path) const {
  const std::vector<uint8_t> data = serialize();
  write_file(path, std::span<const uint8_t>(data));
}

std::shared_ptr<NgramPredictor> NgramPredictor::load(const std::string& path) {
  const std::string data = read_file(path);
  return deserialize(std::span<const uint8_t>(
      reinterpret_cast<const uint8_t*>(data.data()), data.size()));
}

std::vector<double> NgramPredictor::distribution(std::span<const TokenId> context) const {
  const size_t v = vocab_.size();
  std::vector<double> p = base_;
  const double m = smoothing_ * static_cast<double>(v);
  const int max_ctx = order_ - 1;
  const int k_max = static_cast<int>(std::min<size_t>(context.size(), max_ctx));
  for (int k = 1; k <= k_max; ++k) {
    const auto& level = levels_[k - 1];
    const std::string key = pack_key(context.subspan(context.size() - k, k));
    auto it = level.find(key);
    if (it == level.end()) continue;
    const ContextCounts& cc = it->second;
    const double scale = m / (static_cast<double>(cc.total) + m);
    for (double& x : p) x *= scale;
    const double inv = 1.0 / (static_cast<double>(cc.total) + m);
    for (const auto& [t, c] : cc.counts) p[t] += static_cast<double>(c) * inv;
  }
  return p;
}

std::string NgramPredictor::effective_key(std::span<const TokenId> context) const {
  const int max_ctx = order_ - 1;
  const int k_max = static_cast<int>(std::min<size_t>(context.size(), max_ctx));
  for (int k = k_max; k >= 1; --k) {
    std::string key = pack_key(context.subspan(context.size() - k, k));
    if (levels_[k - 1].count(key)) return key;
  }
  return std::string();
}

std::shared_ptr<const RankedVocabulary> NgramPredictor::ranking(
    std::span<const TokenId> context) const {
  const std::string key = effective_key(context);
  if (key.empty()) return base_ranking_;

  {
    std::lock_guard<std::mutex> lock(cache_mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) {
      lru_.splice(lru_.begin(), lru_, it->second.lru_it);
      return it->second.ranking;
    }
  }

  // The distribution depends only on the effective context, so ranking the
  // key's own token span is exact.
  std::vector<TokenId> ids(key.size() / 4);
  std::memcpy(ids.data(), key.data(), key.size());
  const std::vector<double> probs = distribution(ids);
  auto ranked = std::make_shared<RankedVocabulary>(
      RankedVocabulary::from_distribution(probs));

  std::lock_guard<std::mutex> lock(cache_mu_);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second.ranking;
  lru_.push_front(key);
  cache_.emplace(key, CacheEntry{ranked, lru_.begin()});
  if (cache_.size() > kCacheCapacity) {
    cache_.erase(lru_.back());
    lru_.pop_back();
  }
  return ranked;
}

}  // namespace siglm
