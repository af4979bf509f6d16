#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mesc/tokenizer.hpp"

namespace mesc {

using TermId = uint32_t;

/// Dense term <-> id mapping. Ids are assigned in first-occurrence order and
/// run 0..size()-1.
class Vocabulary {
 public:
  TermId add(std::string_view term) {
    auto it = ids_.find(std::string(term));
    if (it != ids_.end()) return it->second;
    TermId id = static_cast<TermId>(terms_.size());
    terms_.emplace_back(term);
    ids_.emplace(terms_.back(), id);
    return id;
  }

  std::optional<TermId> find(std::string_view term) const {
    auto it = ids_.find(std::string(term));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }

  bool contains(std::string_view term) const { return find(term).has_value(); }
  const std::string& term(TermId id) const { return terms_[id]; }
  size_t size() const { return terms_.size(); }
  const std::vector<std::string>& terms() const { return terms_; }

 private:
  std::vector<std::string> terms_;
  std::unordered_map<std::string, TermId> ids_;
};

struct Document {
  std::string id;
  std::vector<TermId> tokens;
};

/// Tokenized documents plus the vocabulary covering every token.
struct DocumentCollection {
  Vocabulary vocab;
  std::vector<Document> docs;
};

/// Builds a collection from already-tokenized documents. Vocabulary ids are
/// assigned in first-occurrence order; duplicate doc ids are rejected.
DocumentCollection make_collection(
    const std::vector<std::pair<std::string, std::vector<std::string>>>& docs);

/// Reads a line-delimited corpus (`doc_id<TAB>text`, UTF-8, blank lines
/// ignored), tokenizes per config. Records that tokenize to nothing are
/// skipped with a warning. Throws on unreadable files, malformed records
/// (with line number) and corpora with no surviving documents.
DocumentCollection ingest_corpus(const std::string& path, const TokenizerConfig& cfg,
                                 std::vector<std::string>* warnings = nullptr);

}  // namespace mesc
