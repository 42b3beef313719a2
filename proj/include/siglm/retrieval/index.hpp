#pragma once

#include <atomic>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "siglm/provider/embedder.hpp"

namespace siglm {

struct KnowledgeDocument {
  std::string doc_id;
  std::string text;
  std::set<std::string> tags;
  std::vector<double> embedding;  // unit norm, dimension = index dimension
};

struct ScoredDocument {
  const KnowledgeDocument* doc = nullptr;
  double score = 0.0;
};

// Brute-force cosine index. Sizes here stay small (<= 1e4 documents), so an
// exact scan wins on determinism over any approximate structure. Sealed
// indices are immutable and safe for concurrent queries.
class VectorIndex {
 public:
  explicit VectorIndex(std::shared_ptr<const Embedder> embedder);

  void add(std::string doc_id, std::string text, std::set<std::string> tags = {});
  void seal();

  bool sealed() const { return sealed_; }
  size_t size() const { return docs_.size(); }
  size_t dimension() const { return embedder_->dimension(); }
  const std::vector<KnowledgeDocument>& documents() const { return docs_; }
  const Embedder& embedder() const { return *embedder_; }

  // Ingestion file: one JSON object per line with doc_id, text, tags.
  static VectorIndex load_jsonl(const std::string& path,
                                std::shared_ptr<const Embedder> embedder);

 private:
  std::shared_ptr<const Embedder> embedder_;
  std::vector<KnowledgeDocument> docs_;
  bool sealed_ = false;
};

// Query interface used by the planner; virtual so tests can script it.
class Retriever {
 public:
  virtual ~Retriever() = default;

  // Documents sorted by descending cosine similarity to the query embedding,
  // ties by ascending doc_id; min(top_k, index size) items.
  // Throws EmptyIndex when the index holds no documents.
  virtual std::vector<ScoredDocument> retrieve(const std::string& query,
                                               size_t top_k) const = 0;

  // Similarity against embed(query + separator + context); documents whose id
  // is in exclude_ids never appear (no duplicate evidence across hops).
  virtual std::vector<ScoredDocument> retrieve_with_context(
      const std::string& query, const std::string& context,
      const std::set<std::string>& exclude_ids, size_t top_k) const = 0;
};

class IndexRetriever : public Retriever {
 public:
  explicit IndexRetriever(const VectorIndex& index);

  std::vector<ScoredDocument> retrieve(const std::string& query,
                                       size_t top_k) const override;
  std::vector<ScoredDocument> retrieve_with_context(
      const std::string& query, const std::string& context,
      const std::set<std::string>& exclude_ids, size_t top_k) const override;

  int retrieve_calls() const { return retrieve_calls_.load(); }
  int context_calls() const { return context_calls_.load(); }

 private:
  std::vector<ScoredDocument> scan(const std::vector<double>& query_embedding,
                                   const std::set<std::string>& exclude_ids,
                                   size_t top_k) const;

  const VectorIndex& index_;
  mutable std::atomic<int> retrieve_calls_{0};
  mutable std::atomic<int> context_calls_{0};
};

}  // namespace siglm
