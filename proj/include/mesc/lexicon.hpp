#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mesc/tokenizer.hpp"

namespace mesc {

/// One translation option for a source term; may span several target tokens.
struct Candidate {
  std::vector<std::string> tokens;

  std::string joined() const;
  bool operator==(const Candidate& other) const { return tokens == other.tokens; }
};

struct DictionaryStats {
  double scale;     // mean candidates per entry
  double variance;  // population variance of candidates per entry
};

/// Rank-ordered bilingual dictionary. Candidate order preserves the source
/// file's order (rank 1 first); immutable after load.
class BilingualDictionary {
 public:
  /// Format: `source<TAB>cand1|cand2|...`, `#` comments, UTF-8. Candidates
  /// may contain spaces (multi-token). Duplicate source terms append their
  /// candidates after the earlier ones with within-entry duplicates dropped
  /// (warning). Throws on structurally malformed lines, with line number.
  static BilingualDictionary load(const std::string& path, const TokenizerConfig& cfg,
                                  std::string name = "");

  /// Empty result signals OOV.
  const std::vector<Candidate>& lookup(std::string_view source_term) const;

  size_t entry_count() const { return order_.size(); }

  /// Mean and population variance of candidates-per-entry. Throws on an
  /// empty dictionary.
  DictionaryStats stats() const;

  const std::string& name() const { return name_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  void add_entry(std::string_view source, std::vector<Candidate> candidates);

 private:
  std::string name_;
  std::unordered_map<std::string, std::vector<Candidate>> entries_;
  std::vector<std::string> order_;  // insertion order of source terms
  std::vector<std::string> warnings_;
};

}  // namespace mesc
