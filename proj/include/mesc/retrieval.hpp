#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mesc/baselines.hpp"
#include "mesc/cooccurrence.hpp"

namespace mesc {

struct Bm25Params {
  double k1 = 1.2;
  double b = 0.75;
};

struct TermWeight {
  std::string term;
  double weight;
};

/// Bag-of-words query: unique terms with weights (a repeated token adds 1.0).
using BagQuery = std::vector<TermWeight>;

BagQuery make_bag_query(const std::vector<std::string>& tokens);

struct Hit {
  std::string doc_id;
  double score;
};

struct RankedList {
  std::string query_id;
  std::vector<Hit> hits;  // descending score, ties by doc_id ascending
};

/// Okapi BM25 with idf(t) = ln((N - df + 0.5) / (df + 0.5) + 1); the +1
/// keeps idf positive without flooring. Throws on an unknown doc_id.
double bm25_score(const CooccurrenceIndex& index, const BagQuery& query, std::string_view doc_id,
                  const Bm25Params& params = {});

RankedList retrieve(const CooccurrenceIndex& index, const std::string& query_id,
                    const BagQuery& query, size_t k, const Bm25Params& params = {},
                    std::vector<std::string>* warnings = nullptr);

/// Structured retrieval: each synonym group is one pseudo-term whose tf is
/// the sum over the group's distinct constituent tokens and whose df counts
/// documents containing any of them.
RankedList retrieve(const CooccurrenceIndex& index, const StructuredQuery& query, size_t k,
                    const Bm25Params& params = {}, std::vector<std::string>* warnings = nullptr);

struct PrfParams {
  size_t fb_docs = 10;
  size_t fb_terms = 20;
  double fb_alpha = 0.5;
};

/// Pseudo-relevance feedback: ranks the top documents' terms by summed
/// tf*idf and appends the best fb_terms new terms at weight fb_alpha.
/// Original terms are never removed.
BagQuery prf_expand(const CooccurrenceIndex& index, const BagQuery& original,
                    const RankedList& initial, const PrfParams& params);

}  // namespace mesc
