#include "siglm/retrieval/index.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "siglm/errors.hpp"
#include "siglm/util.hpp"

namespace siglm {

VectorIndex::VectorIndex(std::shared_ptr<const Embedder> embedder)
    : embedder_(std::move(embedder)) {
  if (!embedder_) throw std::invalid_argument("index needs an embedder");
}

void VectorIndex::add(std::string doc_id, std::string text, std::set<std::string> tags) {
  if (sealed_) throw std::logic_error("index is sealed");
  if (text.empty()) throw std::invalid_argument("document text must be non-empty");
  for (const KnowledgeDocument& d : docs_) {
    if (d.doc_id == doc_id) throw std::invalid_argument("duplicate doc_id: " + doc_id);
  }
  KnowledgeDocument doc;
  doc.doc_id = std::move(doc_id);
  doc.embedding = embedder_->embed(text);
  doc.text = std::move(text);
  doc.tags = std::move(tags);
  docs_.push_back(std::move(doc));
}

void VectorIndex::seal() {
  std::sort(docs_.begin(), docs_.end(),
            [](const KnowledgeDocument& a, const KnowledgeDocument& b) {
              return a.doc_id < b.doc_id;
            });
  sealed_ = true;
}

VectorIndex VectorIndex::load_jsonl(const std::string& path,
                                    std::shared_ptr<const Embedder> embedder) {
  VectorIndex index(std::move(embedder));
  const std::string content = read_file(path);
  for (const std::string& line : split_lines(content)) {
    const std::string trimmed = trim(line);
    if (trimmed.empty()) continue;
    const nlohmann::json doc = nlohmann::json::parse(trimmed);
    std::set<std::string> tags;
    if (doc.contains("tags")) {
      for (const auto& t : doc["tags"]) tags.insert(t.get<std::string>());
    }
    index.add(doc.at("doc_id").get<std::string>(), doc.at("text").get<std::string>(),
              std::move(tags));
  }
  index.seal();
  return index;
}

IndexRetriever::IndexRetriever(const VectorIndex& index) : index_(index) {
  if (!index.sealed()) throw std::logic_error("index must be sealed before retrieval");
}

std::vector<ScoredDocument> IndexRetriever::scan(
    const std::vector<double>& query_embedding,
    const std::set<std::string>& exclude_ids, size_t top_k) const {
  if (index_.size() == 0) throw EmptyIndex("vector index holds no documents");
  std::vector<ScoredDocument> scored;
  scored.reserve(index_.size());
  for (const KnowledgeDocument& doc : index_.documents()) {
    if (exclude_ids.count(doc.doc_id)) continue;
    double dot = 0.0;
    for (size_t i = 0; i < query_embedding.size(); ++i)
      dot += query_embedding[i] * doc.embedding[i];
    scored.push_back({&doc, dot});
  }
  std::sort(scored.begin(), scored.end(), [](const ScoredDocument& a, const ScoredDocument& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.doc->doc_id < b.doc->doc_id;
  });
  if (scored.size() > top_k) scored.resize(top_k);
  return scored;
}

std::vector<ScoredDocument> IndexRetriever::retrieve(const std::string& query,
                                                     size_t top_k) const {
  if (top_k == 0) throw std::invalid_argument("top_k must be >= 1");
  retrieve_calls_.fetch_add(1);
  return scan(index_.embedder().embed(query), {}, top_k);
}

std::vector<ScoredDocument> IndexRetriever::retrieve_with_context(
    const std::string& query, const std::string& context,
    const std::set<std::string>& exclude_ids, size_t top_k) const {
  if (top_k == 0) throw std::invalid_argument("top_k must be >= 1");
  context_calls_.fetch_add(1);
  const std::string joined = context.empty() ? query : query + "\n---\n" + context;
  return scan(index_.embedder().embed(joined), exclude_ids, top_k);
}

}  // namespace siglm
