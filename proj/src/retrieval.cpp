#include "mesc/retrieval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace mesc {

namespace {

double idf(const CooccurrenceIndex& index, uint64_t df) {
  const double n = static_cast<double>(index.doc_count());
  const double d = static_cast<double>(df);
  return std::log((n - d + 0.5) / (d + 0.5) + 1.0);
}

double tf_part(double tf, double doc_len, double avg_len, const Bm25Params& p) {
  return tf * (p.k1 + 1.0) / (tf + p.k1 * (1.0 - p.b + p.b * doc_len / avg_len));
}

uint32_t tf_in_doc(const CooccurrenceIndex& index, TermId term, uint32_t doc) {
  const auto& plist = index.postings(term);
  auto it = std::lower_bound(plist.begin(), plist.end(), doc,
                             [](const Posting& p, uint32_t d) { return p.doc < d; });
  return (it != plist.end() && it->doc == doc) ? it->tf : 0;
}

RankedList finish(const CooccurrenceIndex& index, const std::string& query_id,
                  std::vector<double>& scores, std::vector<uint32_t>& touched, size_t k) {
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  std::sort(touched.begin(), touched.end(), [&](uint32_t x, uint32_t y) {
    if (scores[x] != scores[y]) return scores[x] > scores[y];
    return index.doc_name(x) < index.doc_name(y);
  });
  RankedList out;
  out.query_id = query_id;
  const size_t take = std::min(k, touched.size());
  out.hits.reserve(take);
  for (size_t i = 0; i < take; ++i)
    out.hits.push_back(Hit{index.doc_name(touched[i]), scores[touched[i]]});
  return out;
}

}  // namespace

BagQuery make_bag_query(const std::vector<std::string>& tokens) {
  BagQuery bag;
  for (const auto& tok : tokens) {
    auto it = std::find_if(bag.begin(), bag.end(),
                           [&](const TermWeight& tw) { return tw.term == tok; });
    if (it == bag.end())
      bag.push_back(TermWeight{tok, 1.0});
    else
      it->weight += 1.0;
  }
  return bag;
}

double bm25_score(const CooccurrenceIndex& index, const BagQuery& query, std::string_view doc_id,
                  const Bm25Params& params) {
  const auto doc = index.doc_index(doc_id);
  if (!doc) throw std::runtime_error("unknown doc_id: " + std::string(doc_id));
  const double dl = index.doc_length(*doc);
  double score = 0.0;
  for (const auto& tw : query) {
    const auto term = index.vocab().find(tw.term);
    if (!term) continue;
    const uint32_t tf = tf_in_doc(index, *term, *doc);
    if (tf == 0) continue;
    score += tw.weight * idf(index, index.doc_frequency(*term)) *
             tf_part(tf, dl, index.avg_doc_length(), params);
  }
  return score;
}

RankedList retrieve(const CooccurrenceIndex& index, const std::string& query_id,
                    const BagQuery& query, size_t k, const Bm25Params& params,
                    std::vector<std::string>* warnings) {
  if (k < 1) throw std::invalid_argument("retrieval depth k must be >= 1");
  if (query.empty()) {
    if (warnings) warnings->push_back("query '" + query_id + "' is empty");
    return RankedList{query_id, {}};
  }
  std::vector<double> scores(index.doc_count(), 0.0);
  std::vector<uint32_t> touched;
  for (const auto& tw : query) {
    const auto term = index.vocab().find(tw.term);
    if (!term) continue;
    const double w = tw.weight * idf(index, index.doc_frequency(*term));
    for (const auto& post : index.postings(*term)) {
      scores[post.doc] +=
          w * tf_part(post.tf, index.doc_length(post.doc), index.avg_doc_length(), params);
      touched.push_back(post.doc);
    }
  }
  return finish(index, query_id, scores, touched, k);
}

RankedList retrieve(const CooccurrenceIndex& index, const StructuredQuery& query, size_t k,
                    const Bm25Params& params, std::vector<std::string>* warnings) {
  if (k < 1) throw std::invalid_argument("retrieval depth k must be >= 1");
  if (query.groups.empty()) {
    if (warnings) warnings->push_back("query '" + query.query_id + "' is empty");
    return RankedList{query.query_id, {}};
  }
  std::vector<double> scores(index.doc_count(), 0.0);
  std::vector<uint32_t> touched;
  std::vector<double> group_tf(index.doc_count(), 0.0);
  for (const auto& group : query.groups) {
    // Distinct constituent tokens across all members of the group.
    std::vector<TermId> tokens;
    for (const auto& member : group.members)
      for (const auto& tok : member.tokens)
        if (auto id = index.vocab().find(tok)) tokens.push_back(*id);
    std::sort(tokens.begin(), tokens.end());
    tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
    if (tokens.empty()) continue;

    std::vector<uint32_t> group_docs;
    for (TermId t : tokens) {
      for (const auto& post : index.postings(t)) {
        if (group_tf[post.doc] == 0.0) group_docs.push_back(post.doc);
        group_tf[post.doc] += post.tf;
      }
    }
    const double group_idf = idf(index, group_docs.size());
    for (uint32_t doc : group_docs) {
      scores[doc] += group_idf * tf_part(group_tf[doc], index.doc_length(doc),
                                         index.avg_doc_length(), params);
      group_tf[doc] = 0.0;  // reset for the next group
      touched.push_back(doc);
    }
  }
  return finish(index, query.query_id, scores, touched, k);
}

BagQuery prf_expand(const CooccurrenceIndex& index, const BagQuery& original,
                    const RankedList& initial, const PrfParams& params) {
  BagQuery expanded = original;
  if (params.fb_terms == 0 || params.fb_docs == 0 || initial.hits.empty()) return expanded;

  std::unordered_set<uint32_t> top_docs;
  const size_t take = std::min(params.fb_docs, initial.hits.size());
  for (size_t i = 0; i < take; ++i)
    if (auto d = index.doc_index(initial.hits[i].doc_id)) top_docs.insert(*d);

  struct Scored {
    TermId term;
    double score;
  };
  std::vector<Scored> candidates;
  for (TermId t = 0; t < index.vocab().size(); ++t) {
    double tf_sum = 0.0;
    for (const auto& post : index.postings(t))
      if (top_docs.count(post.doc)) tf_sum += post.tf;
    if (tf_sum > 0.0)
      candidates.push_back(Scored{t, tf_sum * idf(index, index.doc_frequency(t))});
  }
  std::sort(candidates.begin(), candidates.end(), [&](const Scored& x, const Scored& y) {
    if (x.score != y.score) return x.score > y.score;
    return index.vocab().term(x.term) < index.vocab().term(y.term);
  });

  std::unordered_set<std::string> present;
  for (const auto& tw : original) present.insert(tw.term);
  size_t appended = 0;
  for (const auto& cand : candidates) {
    if (appended == params.fb_terms) break;
    const std::string& term = index.vocab().term(cand.term);
    if (present.count(term)) continue;  // originals keep their weight
    expanded.push_back(TermWeight{term, params.fb_alpha});
    ++appended;
  }
  return expanded;
}

}  // namespace mesc
