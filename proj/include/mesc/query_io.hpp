#pragma once

#include <string>
#include <vector>

#include "mesc/baselines.hpp"
#include "mesc/mesc_model.hpp"
#include "mesc/retrieval.hpp"

namespace mesc {

struct Topic {
  std::string query_id;
  std::string text;
};

/// Topics file: `query_id<TAB>query text`, UTF-8, blank lines and `#`
/// comments ignored.
std::vector<Topic> read_topics(const std::string& path);

/// Translated bag-of-words queries: `query_id<TAB>terms space-joined`.
struct TranslatedQuery {
  std::string query_id;
  std::vector<std::string> terms;
};
void write_translations(const std::vector<TranslatedQuery>& queries, const std::string& path);
std::vector<TranslatedQuery> read_translations(const std::string& path);

/// Structured queries: `query_id<TAB>{c1|c2} {c3} ...`; members keep their
/// internal spaces inside the braces.
std::string format_structured(const StructuredQuery& query);
void write_structured(const std::vector<StructuredQuery>& queries, const std::string& path);
StructuredQuery parse_structured(const std::string& query_id, std::string_view body);

/// A retrieval input line is structured iff its body starts with '{'.
bool looks_structured(std::string_view body);

/// Per-candidate diagnostics, line-delimited:
/// `query_id<TAB>source<TAB>form<TAB>list<TAB>probability<TAB>chosen`.
std::string format_diagnostics(const TranslationResult& result);

const char* choice_source_name(ChoiceSource src);

}  // namespace mesc
