#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mesc {

/// Tokenization knobs shared by corpus ingestion, dictionary loading and
/// query parsing. Whitespace splitting is always on; everything else is
/// configurable because the target language may not have case at all.
struct TokenizerConfig {
  bool case_fold = true;
  bool strip_punct = true;
};

/// NFC-normalizes, optionally maps punctuation to spaces, optionally
/// lowercases, then splits on Unicode whitespace. Returned tokens are NFC.
std::vector<std::string> tokenize(std::string_view text, const TokenizerConfig& cfg);

/// Normalization applied to a single term (no splitting): NFC + optional fold.
std::string normalize_term(std::string_view term, const TokenizerConfig& cfg);

}  // namespace mesc
