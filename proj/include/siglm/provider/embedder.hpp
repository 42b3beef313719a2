#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace siglm {

class Embedder {
 public:
  virtual ~Embedder() = default;
  virtual size_t dimension() const = 0;
  // Unit-norm vector; deterministic for fixed implementation state.
  // Throws std::invalid_argument on empty text.
  virtual std::vector<double> embed(const std::string& text) const = 0;
};

// Seeded feature-hashing embedder. Word unigrams plus character trigrams are
// hashed into signed buckets and the result is L2-normalized. Purely lexical:
// deterministic stand-in for a learned embedding model.
class HashingEmbedder : public Embedder {
 public:
  explicit HashingEmbedder(size_t dimension = 64, uint64_t seed = 0x5eedU);

  size_t dimension() const override { return dimension_; }
  std::vector<double> embed(const std::string& text) const override;

 private:
  size_t dimension_;
  uint64_t seed_;
};

double cosine(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace siglm
