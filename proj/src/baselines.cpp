#include "mesc/baselines.hpp"

#include <stdexcept>

namespace mesc {

std::vector<std::string> top_n_translate(const std::vector<std::string>& query_terms,
                                         const BilingualDictionary& dict, size_t n,
                                         const TransliterationTable* table,
                                         const Vocabulary& vocabulary, const MescParams& params) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::vector<std::string> out;
  for (const auto& term : query_terms) {
    if (params.stopwords.count(term)) continue;
    const auto& candidates = dict.lookup(term);
    if (!candidates.empty()) {
      const size_t take = std::min(n, candidates.size());
      for (size_t j = 0; j < take; ++j)
        for (const auto& tok : candidates[j].tokens) out.push_back(tok);
      continue;
    }
    if (table) {
      const TranslitSupport ts =
          transliterate_oov(term, *table, vocabulary, params.translit_cap);
      const size_t take = std::min(n, ts.candidates.size());
      for (size_t j = 0; j < take; ++j) out.push_back(ts.candidates[j]);
    } else {
      out.push_back(term);  // pass through untranslated
    }
  }
  return out;
}

StructuredQuery pirkola_structured(const std::string& query_id,
                                   const std::vector<std::string>& query_terms,
                                   const BilingualDictionary& dict,
                                   const TransliterationTable* table,
                                   const Vocabulary& vocabulary, const MescParams& params) {
  StructuredQuery sq;
  sq.query_id = query_id;
  for (const auto& term : query_terms) {
    if (params.stopwords.count(term)) continue;
    SynonymGroup group;
    group.source = term;
    const auto& candidates = dict.lookup(term);
    if (!candidates.empty()) {
      group.members = candidates;
    } else if (table) {
      const TranslitSupport ts =
          transliterate_oov(term, *table, vocabulary, params.translit_cap);
      for (const auto& variant : ts.candidates) group.members.push_back(Candidate{{variant}});
    } else {
      group.members.push_back(Candidate{{term}});
    }
    sq.groups.push_back(std::move(group));
  }
  return sq;
}

}  // namespace mesc
