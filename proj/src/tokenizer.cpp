#include "mesc/tokenizer.hpp"

#include "mesc/unicode.hpp"

namespace mesc {

std::vector<std::string> tokenize(std::string_view text, const TokenizerConfig& cfg) {
  std::u32string cps = utf8_decode(nfc(text));
  for (auto& c : cps) {
    if (cfg.strip_punct && is_punctuation(c)) {
      c = U' ';
    } else if (cfg.case_fold) {
      c = fold_case(c);
    }
  }
  std::vector<std::string> tokens;
  size_t start = 0;
  const size_t n = cps.size();
  for (size_t i = 0; i <= n; ++i) {
    if (i == n || is_whitespace(cps[i])) {
      if (i > start) {
        // Folding can denormalize in rare cases; re-run NFC per token.
        tokens.push_back(nfc(utf8_encode(std::u32string_view(cps).substr(start, i - start))));
      }
      start = i + 1;
    }
  }
  return tokens;
}

std::string normalize_term(std::string_view term, const TokenizerConfig& cfg) {
  std::string s = nfc(term);
  if (cfg.case_fold) s = nfc(fold_case(s));
  return s;
}

}  // namespace mesc
