#include "siglm/provider/embedder.hpp"

#include <cmath>
#include <stdexcept>

#include "siglm/util.hpp"

namespace siglm {

HashingEmbedder::HashingEmbedder(size_t dimension, uint64_t seed)
    : dimension_(dimension), seed_(seed) {
  if (dimension == 0) throw std::invalid_argument("embedder dimension must be positive");
}

std::vector<double> HashingEmbedder::embed(const std::string& text) const {
  if (text.empty()) throw std::invalid_argument("cannot embed empty text");
  std::vector<double> v(dimension_, 0.0);

  auto bump = [&](std::string_view feature, double weight) {
    const uint64_t h = fnv1a64(feature, seed_);
    const size_t bucket = static_cast<size_t>(h % dimension_);
    const double sign = (h >> 63) ? -1.0 : 1.0;
    v[bucket] += sign * weight;
  };

  const std::string lower = lowercase(text);

  // Word unigrams.
  size_t i = 0;
  while (i < lower.size()) {
    if (std::isalnum(static_cast<unsigned char>(lower[i]))) {
      size_t j = i;
      while (j < lower.size() && std::isalnum(static_cast<unsigned char>(lower[j]))) ++j;
      bump(std::string_view(lower).substr(i, j - i), 1.0);
      i = j;
    } else {
      ++i;
    }
  }

  // Character trigrams give partial-overlap signal.
  for (size_t k = 0; k + 3 <= lower.size(); ++k) {
    bump(std::string_view(lower).substr(k, 3), 0.5);
  }

  double norm = 0.0;
  for (double x : v) norm += x * x;
  if (norm == 0.0) {
    // Text with no hashable features still gets a deterministic direction.
    bump(text, 1.0);
    norm = 0.0;
    for (double x : v) norm += x * x;
  }
  norm = std::sqrt(norm);
  for (double& x : v) x /= norm;
  return v;
}

double cosine(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  double dot = 0.0;
  double na = 0.0;
  double nb = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

}  // namespace siglm
