#pragma once

#include <string>
#include <vector>

#include "mesc/lexicon.hpp"
#include "mesc/mesc_model.hpp"
#include "mesc/translit.hpp"

namespace mesc {

/// One synonym set per translatable source term; all members are treated as
/// instances of a single pseudo-term at retrieval time.
struct SynonymGroup {
  std::string source;
  std::vector<Candidate> members;
};

struct StructuredQuery {
  std::string query_id;
  std::vector<SynonymGroup> groups;
};

/// Rank-based baseline: the first min(n, |candidates|) dictionary candidates
/// per term, flattened into a bag of words. OOV terms go through the
/// transliteration fallback, clamped the same way.
std::vector<std::string> top_n_translate(const std::vector<std::string>& query_terms,
                                         const BilingualDictionary& dict, size_t n,
                                         const TransliterationTable* table,
                                         const Vocabulary& vocabulary, const MescParams& params);

/// Synonym-set baseline: one group per term holding every dictionary
/// candidate; OOV terms contribute their transliteration variants.
StructuredQuery pirkola_structured(const std::string& query_id,
                                   const std::vector<std::string>& query_terms,
                                   const BilingualDictionary& dict,
                                   const TransliterationTable* table,
                                   const Vocabulary& vocabulary, const MescParams& params);

}  // namespace mesc
