#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mesc/corpus.hpp"

namespace mesc {

struct Posting {
  uint32_t doc;  // index into the document table
  uint32_t tf;
};

struct PairCount {
  TermId a;  // canonical: a <= b
  TermId b;
  uint64_t count;
};

/// Windowed co-occurrence statistics plus the inverted index over one
/// monolingual collection. Immutable once built; reads are thread-safe.
///
/// pair counts: number of unordered position pairs (i, j), i < j, j - i <=
/// window, inside one document, keyed by the unordered token pair. The binary
/// adjacency relation is pair_count > 0.
class CooccurrenceIndex {
 public:
  static CooccurrenceIndex build(const DocumentCollection& coll, uint32_t window);

  uint32_t window() const { return window_; }
  const Vocabulary& vocab() const { return vocab_; }

  uint64_t pair_count(TermId a, TermId b) const;
  uint64_t total_pair_mass() const { return total_pair_mass_; }
  const std::vector<PairCount>& pairs() const { return pairs_; }

  bool cooccurs(std::string_view a, std::string_view b) const;

  /// pair_count(a, b) / total_pair_mass; 0 for unknown terms or unseen
  /// pairs. Throws if the index holds no pair mass at all.
  double joint_probability(std::string_view a, std::string_view b) const;
  double joint_probability(TermId a, TermId b) const;

  uint64_t unigram_count(TermId t) const { return unigram_counts_[t]; }

  // Retrieval-side statistics.
  uint32_t doc_count() const { return static_cast<uint32_t>(doc_ids_.size()); }
  const std::string& doc_name(uint32_t doc) const { return doc_ids_[doc]; }
  std::optional<uint32_t> doc_index(std::string_view doc_id) const;
  uint32_t doc_length(uint32_t doc) const { return doc_lengths_[doc]; }
  double avg_doc_length() const { return avg_doc_length_; }
  const std::vector<Posting>& postings(TermId t) const { return postings_[t]; }
  uint32_t doc_frequency(TermId t) const { return static_cast<uint32_t>(postings_[t].size()); }

  /// Single-file binary persistence (magic, version, checksum). load(save(x))
  /// is observationally identical to x and re-serializes byte-identically.
  void save(const std::string& path) const;
  static CooccurrenceIndex load(const std::string& path);

 private:
  CooccurrenceIndex() = default;
  void finalize_pairs();

  uint32_t window_ = 0;
  Vocabulary vocab_;
  std::vector<std::string> doc_ids_;
  std::vector<uint32_t> doc_lengths_;
  double avg_doc_length_ = 0.0;
  std::vector<uint64_t> unigram_counts_;
  std::vector<PairCount> pairs_;  // sorted by (a, b)
  std::unordered_map<uint64_t, uint64_t> pair_lookup_;
  uint64_t total_pair_mass_ = 0;
  std::vector<std::vector<Posting>> postings_;
  std::unordered_map<std::string, uint32_t> doc_index_;
};

}  // namespace mesc
