#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "mesc/cooccurrence.hpp"
#include "mesc/edit_distance.hpp"
#include "mesc/lexicon.hpp"
#include "mesc/translit.hpp"

namespace mesc {

enum class SupportOrigin { kEditNeighbor, kTransliteration };

struct SupportCandidate {
  std::string term;  // single vocabulary token (or literal fallback variant)
  SupportOrigin origin;
  int distance = 0;    // edit distance to the anchor, 1 or 2 (edit neighbors)
  std::string anchor;  // the dictionary-candidate token it derived from
  bool unverified = false;  // transliteration fallback absent from vocabulary
};

struct TermCandidates {
  std::string source;
  std::vector<Candidate> dict;             // rank-ordered, possibly empty (OOV)
  std::vector<SupportCandidate> support;
};

struct QueryCandidates {
  std::string query_id;
  std::vector<TermCandidates> terms;
};

struct MescParams {
  size_t min_support_stem_len = 3;  // anchors shorter than this yield no neighbors
  size_t translit_cap = 256;
  std::unordered_set<std::string> stopwords;
};

/// Per-term probability vectors aligned with the candidate lists. After
/// normalization each translatable term's mass sums to 1 (or the uniform
/// fallback applies when no co-occurrence evidence exists).
struct TermDistribution {
  std::vector<double> p_dict;
  std::vector<double> p_support;
  bool normalized = false;
  bool fallback_used = false;
  bool untranslatable = false;
};

struct TranslationDistribution {
  std::vector<TermDistribution> terms;
};

/// Tripwire counters for the scoring loops. Support-support pairs must never
/// contribute probability mass, so that counter has to stay zero.
struct ScoreDiagnostics {
  uint64_t support_support_pairs = 0;
  uint64_t pair_evaluations = 0;
};

enum class ChoiceSource { kDictionary, kSupport, kTransliterationFallback, kUntranslated };

struct ScoredCandidate {
  std::string form;  // space-joined surface form
  ChoiceSource list;
  double probability;
  bool chosen;
};

struct TermTranslation {
  std::string source;
  std::vector<std::string> chosen_tokens;
  ChoiceSource source_list;
  double score = 0.0;
  bool fallback_used = false;  // no co-occurrence evidence; picked by rank
  bool unverified = false;     // transliteration fallback outside the vocabulary
  std::vector<ScoredCandidate> diagnostics;
};

struct TranslationResult {
  std::string query_id;
  std::vector<TermTranslation> terms;
};

/// Builds per-term dictionary candidate lists; OOV terms (empty lookup) get
/// their transliteration variants as support candidates when a table is
/// supplied.
QueryCandidates lookup_candidates(const std::string& query_id,
                                  const std::vector<std::string>& source_terms,
                                  const BilingualDictionary& dict,
                                  const TransliterationTable* table, const Vocabulary& vocabulary,
                                  const MescParams& params);

/// Fills each term's support list: vocabulary terms within edit distance 1..2
/// of a dictionary-candidate token of that term which also co-occur with a
/// dictionary candidate of a *different* query term. Multi-token candidates
/// anchor on each constituent token of sufficient length. Existing
/// (transliteration) support entries are preserved; duplicates of same-term
/// dictionary candidates are excluded. Output ordered by (distance, term).
void extract_support_candidates(QueryCandidates& qc, const CooccurrenceIndex& index,
                                const NeighborFinder& finder, const MescParams& params);

TranslationDistribution make_distribution(const QueryCandidates& qc);

/// Raw dictionary-candidate scores: sum of joint probabilities against the
/// dictionary *and* support candidates of every other query term. Multi-token
/// joint probability takes the maximum over constituent-token pairs.
void score_dictionary_candidates(const QueryCandidates& qc, const CooccurrenceIndex& index,
                                 TranslationDistribution& dist,
                                 ScoreDiagnostics* diag = nullptr);

/// Raw support-candidate scores: sum of joint probabilities against the
/// dictionary candidates of other terms only; support-support pairs never
/// contribute.
void score_support_candidates(const QueryCandidates& qc, const CooccurrenceIndex& index,
                              TranslationDistribution& dist, ScoreDiagnostics* diag = nullptr);

/// Per-term normalization to a probability distribution. Zero-mass terms take
/// the uniform distribution over dictionary candidates (or over support
/// candidates for OOV terms with nothing else); terms with no candidates at
/// all are marked untranslatable.
void normalize(TranslationDistribution& dist);

/// Argmax selection per term. Ties break dictionary over support, then lower
/// dictionary rank, then lexicographic surface form. Untranslatable terms
/// pass through as their source form.
TranslationResult select_translations(const TranslationDistribution& dist,
                                      const QueryCandidates& qc);

/// Full pipeline for one query: lookup -> OOV transliteration -> support
/// extraction -> scoring -> normalization -> selection.
TranslationResult translate_query(const std::string& query_id,
                                  const std::vector<std::string>& source_terms,
                                  const BilingualDictionary& dict, const CooccurrenceIndex& index,
                                  const TransliterationTable* table, const MescParams& params,
                                  const NeighborFinder* finder = nullptr,
                                  ScoreDiagnostics* diag = nullptr);

}  // namespace mesc
