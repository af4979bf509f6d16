#pragma once

#include <array>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "mesc/retrieval.hpp"

namespace mesc {

/// Relevance judgments. Grades > 0 count as relevant; all metrics binarize.
class Qrels {
 public:
  void add(const std::string& query_id, const std::string& doc_id, int grade);
  bool is_relevant(const std::string& query_id, const std::string& doc_id) const;
  size_t relevant_count(const std::string& query_id) const;
  bool has_query(const std::string& query_id) const { return judgments_.count(query_id) > 0; }
  const std::map<std::string, std::unordered_map<std::string, int>>& judgments() const {
    return judgments_;
  }

 private:
  std::map<std::string, std::unordered_map<std::string, int>> judgments_;
};

/// Uninterpolated average precision. Requires >= 1 relevant document for the
/// query in the qrels (throws otherwise).
double average_precision(const RankedList& run, const Qrels& qrels);

/// Fraction of relevant documents among the top k ranks; missing ranks count
/// as non-relevant.
double precision_at_k(const RankedList& run, const Qrels& qrels, size_t k);

/// 11-point interpolated precision: p(r) = max precision at any recall >= r
/// for r in {0.0, 0.1, ..., 1.0}. Same precondition as average_precision.
std::array<double, 11> interpolated_pr(const RankedList& run, const Qrels& qrels);

struct QueryEval {
  std::string query_id;
  double ap;
  double p5;
  double p10;
  std::array<double, 11> iprec;
};

struct EvalReport {
  std::vector<QueryEval> per_query;  // ordered by query_id
  double map = 0.0;
  double mean_p5 = 0.0;
  double mean_p10 = 0.0;
  std::array<double, 11> mean_iprec{};
  std::vector<std::string> warnings;
};

/// Evaluates every qrels query carrying at least one relevant document;
/// queries absent from the run score zero, queries with no relevant docs are
/// excluded with a warning. Run entries without judgments are warned about.
EvalReport evaluate_run(const std::vector<RankedList>& run, const Qrels& qrels);

// ---- TREC-format I/O ----

struct RunFile {
  std::vector<RankedList> lists;  // file order of first appearance
  std::string run_tag;
  std::vector<std::string> warnings;
};

/// Lines `query_id Q0 doc_id rank score run_tag`. If the rank column
/// disagrees with descending-score order the list is re-ranked by score with
/// a warning.
RunFile read_run(const std::string& path);

/// Ranks start at 1; scores print with 6 decimal places.
void write_run(const std::vector<RankedList>& lists, const std::string& run_tag,
               const std::string& path);

/// Lines `query_id 0 doc_id grade`; duplicate (query, doc) pairs are errors.
Qrels read_qrels(const std::string& path);

/// `metric<TAB>query_id|all<TAB>value` lines, 4 decimal places.
std::string format_report_structured(const EvalReport& report);

/// Column-aligned human-readable rendering of the same numbers.
std::string format_report_aligned(const EvalReport& report);

}  // namespace mesc
