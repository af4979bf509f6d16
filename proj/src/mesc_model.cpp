#include "mesc/mesc_model.hpp"

#include <algorithm>
#include <map>

#include "mesc/unicode.hpp"

namespace mesc {

namespace {

enum class PairKind { kDict, kSupport };

/// Joint probability between two candidate token sequences: the maximum over
/// constituent-token pairs, so any part can anchor a multi-token phrase.
double pair_probability(const CooccurrenceIndex& index, PairKind kind_a,
                        const std::vector<std::string>& a, PairKind kind_b,
                        const std::vector<std::string>& b, ScoreDiagnostics* diag) {
  if (diag) {
    ++diag->pair_evaluations;
    if (kind_a == PairKind::kSupport && kind_b == PairKind::kSupport)
      ++diag->support_support_pairs;
  }
  if (index.total_pair_mass() == 0) return 0.0;
  double best = 0.0;
  for (const auto& x : a)
    for (const auto& y : b) best = std::max(best, index.joint_probability(x, y));
  return best;
}

std::vector<std::string> single(const std::string& tok) { return {tok}; }

}  // namespace

QueryCandidates lookup_candidates(const std::string& query_id,
                                  const std::vector<std::string>& source_terms,
                                  const BilingualDictionary& dict,
                                  const TransliterationTable* table, const Vocabulary& vocabulary,
                                  const MescParams& params) {
  QueryCandidates qc;
  qc.query_id = query_id;
  for (const auto& term : source_terms) {
    if (params.stopwords.count(term)) continue;
    TermCandidates tc;
    tc.source = term;
    tc.dict = dict.lookup(term);
    if (tc.dict.empty() && table) {
      const TranslitSupport ts = transliterate_oov(term, *table, vocabulary, params.translit_cap);
      for (const auto& variant : ts.candidates) {
        SupportCandidate sc;
        sc.term = variant;
        sc.origin = SupportOrigin::kTransliteration;
        sc.unverified = ts.unverified;
        tc.support.push_back(std::move(sc));
      }
    }
    qc.terms.push_back(std::move(tc));
  }
  return qc;
}

void extract_support_candidates(QueryCandidates& qc, const CooccurrenceIndex& index,
                                const NeighborFinder& finder, const MescParams& params) {
  const size_t term_count = qc.terms.size();
  for (size_t i = 0; i < term_count; ++i) {
    auto& tc = qc.terms[i];
    if (tc.dict.empty()) continue;  // OOV terms have no anchors

    // Adjacency targets: every constituent token of every dictionary
    // candidate of a different query term.
    std::vector<TermId> targets;
    for (size_t other = 0; other < term_count; ++other) {
      if (other == i) continue;
      for (const auto& cand : qc.terms[other].dict)
        for (const auto& tok : cand.tokens)
          if (auto id = index.vocab().find(tok)) targets.push_back(*id);
    }
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    if (targets.empty()) continue;  // no i' != i with in-vocabulary candidates

    // Surfaces that may not reappear as support of this same term.
    std::unordered_set<std::string> excluded;
    for (const auto& cand : tc.dict)
      if (cand.tokens.size() == 1) excluded.insert(cand.tokens.front());
    for (const auto& sc : tc.support) excluded.insert(sc.term);

    std::map<std::string, std::pair<int, std::string>> found;  // term -> (distance, anchor)
    for (const auto& cand : tc.dict) {
      for (const auto& anchor : cand.tokens) {
        if (utf8_decode(anchor).size() < params.min_support_stem_len) continue;
        for (const auto& hit : finder.neighbors(anchor)) {
          auto it = found.find(hit.term);
          if (it == found.end() || hit.distance < it->second.first)
            found[hit.term] = {hit.distance, anchor};
        }
      }
    }

    std::vector<SupportCandidate> added;
    for (const auto& [term, info] : found) {
      if (excluded.count(term)) continue;
      const auto vid = index.vocab().find(term);
      if (!vid) continue;  // finder built over a different term set
      const bool adjacent = std::any_of(targets.begin(), targets.end(), [&](TermId u) {
        return index.pair_count(*vid, u) > 0;
      });
      if (!adjacent) continue;
      SupportCandidate sc;
      sc.term = term;
      sc.origin = SupportOrigin::kEditNeighbor;
      sc.distance = info.first;
      sc.anchor = info.second;
      added.push_back(std::move(sc));
    }
    std::sort(added.begin(), added.end(), [](const SupportCandidate& x, const SupportCandidate& y) {
      return x.distance != y.distance ? x.distance < y.distance : x.term < y.term;
    });
    for (auto& sc : added) tc.support.push_back(std::move(sc));
  }
}

TranslationDistribution make_distribution(const QueryCandidates& qc) {
  TranslationDistribution dist;
  dist.terms.resize(qc.terms.size());
  for (size_t i = 0; i < qc.terms.size(); ++i) {
    dist.terms[i].p_dict.assign(qc.terms[i].dict.size(), 0.0);
    dist.terms[i].p_support.assign(qc.terms[i].support.size(), 0.0);
  }
  return dist;
}

void score_dictionary_candidates(const QueryCandidates& qc, const CooccurrenceIndex& index,
                                 TranslationDistribution& dist, ScoreDiagnostics* diag) {
  const size_t term_count = qc.terms.size();
  for (size_t i = 0; i < term_count; ++i) {
    const auto& tc = qc.terms[i];
    for (size_t j = 0; j < tc.dict.size(); ++j) {
      double sum = 0.0;
      for (size_t other = 0; other < term_count; ++other) {
        if (other == i) continue;
        for (const auto& cand : qc.terms[other].dict)
          sum += pair_probability(index, PairKind::kDict, tc.dict[j].tokens, PairKind::kDict,
                                  cand.tokens, diag);
        for (const auto& sc : qc.terms[other].support)
          sum += pair_probability(index, PairKind::kDict, tc.dict[j].tokens, PairKind::kSupport,
                                  single(sc.term), diag);
      }
      dist.terms[i].p_dict[j] = sum;
    }
  }
}

void score_support_candidates(const QueryCandidates& qc, const CooccurrenceIndex& index,
                              TranslationDistribution& dist, ScoreDiagnostics* diag) {
  const size_t term_count = qc.terms.size();
  for (size_t i = 0; i < term_count; ++i) {
    const auto& tc = qc.terms[i];
    for (size_t j = 0; j < tc.support.size(); ++j) {
      double sum = 0.0;
      for (size_t other = 0; other < term_count; ++other) {
        if (other == i) continue;
        // Dictionary candidates only; support-support pairs would let two
        // generated neighbors vouch for each other.
        for (const auto& cand : qc.terms[other].dict)
          sum += pair_probability(index, PairKind::kSupport, single(tc.support[j].term),
                                  PairKind::kDict, cand.tokens, diag);
      }
      dist.terms[i].p_support[j] = sum;
    }
  }
}

void normalize(TranslationDistribution& dist) {
  for (size_t i = 0; i < dist.terms.size(); ++i) {
    auto& td = dist.terms[i];
    double total = 0.0;
    for (double p : td.p_dict) total += p;
    for (double p : td.p_support) total += p;
    if (total > 0.0) {
      for (double& p : td.p_dict) p /= total;
      for (double& p : td.p_support) p /= total;
    } else if (!td.p_dict.empty()) {
      td.fallback_used = true;
      const double u = 1.0 / static_cast<double>(td.p_dict.size());
      for (double& p : td.p_dict) p = u;
    } else if (!td.p_support.empty()) {
      td.fallback_used = true;
      const double u = 1.0 / static_cast<double>(td.p_support.size());
      for (double& p : td.p_support) p = u;
    } else {
      td.untranslatable = true;
    }
    td.normalized = !td.untranslatable;
  }
}

TranslationResult select_translations(const TranslationDistribution& dist,
                                      const QueryCandidates& qc) {
  TranslationResult result;
  result.query_id = qc.query_id;
  for (size_t i = 0; i < qc.terms.size(); ++i) {
    const auto& tc = qc.terms[i];
    const auto& td = dist.terms[i];
    TermTranslation tt;
    tt.source = tc.source;
    tt.fallback_used = td.fallback_used;

    if (td.untranslatable) {
      tt.chosen_tokens = {tc.source};
      tt.source_list = ChoiceSource::kUntranslated;
      result.terms.push_back(std::move(tt));
      continue;
    }

    struct Choice {
      double prob;
      bool is_dict;
      size_t rank;       // dictionary rank, for dictionary candidates
      std::string form;  // joined surface, for lexicographic ties
      size_t support_idx = 0;
    };
    std::optional<Choice> best;
    const auto better = [](const Choice& a, const Choice& b) {
      if (a.prob != b.prob) return a.prob > b.prob;
      if (a.is_dict != b.is_dict) return a.is_dict;
      if (a.is_dict) return a.rank < b.rank;
      return a.form < b.form;
    };
    for (size_t j = 0; j < tc.dict.size(); ++j) {
      Choice c{td.p_dict[j], true, j, tc.dict[j].joined()};
      if (!best || better(c, *best)) best = std::move(c);
    }
    for (size_t j = 0; j < tc.support.size(); ++j) {
      Choice c{td.p_support[j], false, 0, tc.support[j].term, j};
      if (!best || better(c, *best)) best = std::move(c);
    }

    if (best->is_dict) {
      tt.chosen_tokens = tc.dict[best->rank].tokens;
      tt.source_list = ChoiceSource::kDictionary;
    } else {
      const auto& sc = tc.support[best->support_idx];
      tt.chosen_tokens = {sc.term};
      tt.source_list = sc.origin == SupportOrigin::kTransliteration
                           ? ChoiceSource::kTransliterationFallback
                           : ChoiceSource::kSupport;
      tt.unverified = sc.unverified;
    }
    tt.score = best->prob;

    for (size_t j = 0; j < tc.dict.size(); ++j)
      tt.diagnostics.push_back(ScoredCandidate{tc.dict[j].joined(), ChoiceSource::kDictionary,
                                               td.p_dict[j],
                                               best->is_dict && best->rank == j});
    for (size_t j = 0; j < tc.support.size(); ++j)
      tt.diagnostics.push_back(ScoredCandidate{
          tc.support[j].term,
          tc.support[j].origin == SupportOrigin::kTransliteration
              ? ChoiceSource::kTransliterationFallback
              : ChoiceSource::kSupport,
          td.p_support[j], !best->is_dict && best->support_idx == j});
    result.terms.push_back(std::move(tt));
  }
  return result;
}

TranslationResult translate_query(const std::string& query_id,
                                  const std::vector<std::string>& source_terms,
                                  const BilingualDictionary& dict, const CooccurrenceIndex& index,
                                  const TransliterationTable* table, const MescParams& params,
                                  const NeighborFinder* finder, ScoreDiagnostics* diag) {
  QueryCandidates qc =
      lookup_candidates(query_id, source_terms, dict, table, index.vocab(), params);
  std::optional<NeighborFinder> local;
  if (!finder) {
    local.emplace(index.vocab().terms(), params.min_support_stem_len);
    finder = &*local;
  }
  extract_support_candidates(qc, index, *finder, params);
  TranslationDistribution dist = make_distribution(qc);
  score_dictionary_candidates(qc, index, dist, diag);
  score_support_candidates(qc, index, dist, diag);
  normalize(dist);
  return select_translations(dist, qc);
}

}  // namespace mesc
