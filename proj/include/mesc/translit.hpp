#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mesc/corpus.hpp"

namespace mesc {

/// Rule-based transliteration table: consonants map deterministically to one
/// target string, vowels expand into every configured alternative (which may
/// include the empty string). Graphemes are code point sequences after NFC;
/// digraph keys are matched longest-first.
class TransliterationTable {
 public:
  /// Rule file lines: `C <src> <dst>` or `V <src> <alt1>|<alt2>|...`
  /// (an empty alternative is written as a trailing or doubled `|`);
  /// `#` comments. Throws on duplicate graphemes, empty alternative lists
  /// and malformed lines.
  static TransliterationTable load(const std::string& path);

  struct Rule {
    bool is_vowel;
    std::vector<std::string> alternatives;  // consonants hold exactly one
  };

  /// Longest-first grapheme segmentation; graphemes absent from the table
  /// are passed through unchanged and reported.
  struct Segment {
    std::string grapheme;
    const Rule* rule;  // null for pass-through
  };
  std::vector<Segment> segment(std::string_view term) const;

  size_t size() const { return rules_.size(); }
  const Rule* find(std::string_view grapheme) const;

  void add_rule(std::string_view grapheme, bool is_vowel, std::vector<std::string> alternatives);

 private:
  std::map<std::string, Rule> rules_;
  size_t max_key_codepoints_ = 0;
};

struct VariantExpansion {
  std::vector<std::string> variants;  // deduplicated, expansion order
  bool truncated = false;
  std::vector<std::string> unknown_graphemes;
};

/// Cartesian expansion of a source term through the table, earlier vowel
/// alternatives first, capped at `cap` variants.
VariantExpansion generate_variants(std::string_view term, const TransliterationTable& table,
                                   size_t cap);

struct TranslitSupport {
  std::vector<std::string> candidates;
  bool unverified = false;  // nothing matched the vocabulary; literal fallback
};

/// Variants filtered to vocabulary membership; when none survives, the first
/// generated variant is returned as an unverified literal fallback.
TranslitSupport transliterate_oov(std::string_view term, const TransliterationTable& table,
                                  const Vocabulary& vocabulary, size_t cap);

}  // namespace mesc
