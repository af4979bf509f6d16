#include "mesc/query_io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace mesc {

namespace {

std::vector<std::string> read_tab_lines(const std::string& path, const char* what,
                                        std::vector<std::pair<std::string, std::string>>& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(std::string("cannot open ") + what + " file: " + path);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0)
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": malformed " + what +
                               " line, expected id<TAB>body");
    out.emplace_back(line.substr(0, tab), line.substr(tab + 1));
  }
  return {};
}

std::vector<std::string> split_spaces(std::string_view body) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t i = 0; i <= body.size(); ++i) {
    if (i == body.size() || body[i] == ' ') {
      if (i > start) out.emplace_back(body.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

std::vector<Topic> read_topics(const std::string& path) {
  std::vector<std::pair<std::string, std::string>> lines;
  read_tab_lines(path, "topics", lines);
  std::vector<Topic> topics;
  topics.reserve(lines.size());
  for (auto& [id, body] : lines) topics.push_back(Topic{std::move(id), std::move(body)});
  return topics;
}

void write_translations(const std::vector<TranslatedQuery>& queries, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write translations file: " + path);
  for (const auto& q : queries) {
    out << q.query_id << '\t';
    for (size_t i = 0; i < q.terms.size(); ++i) {
      if (i) out << ' ';
      out << q.terms[i];
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<TranslatedQuery> read_translations(const std::string& path) {
  std::vector<std::pair<std::string, std::string>> lines;
  read_tab_lines(path, "translations", lines);
  std::vector<TranslatedQuery> queries;
  queries.reserve(lines.size());
  for (auto& [id, body] : lines)
    queries.push_back(TranslatedQuery{std::move(id), split_spaces(body)});
  return queries;
}

std::string format_structured(const StructuredQuery& query) {
  std::string out;
  for (size_t g = 0; g < query.groups.size(); ++g) {
    if (g) out.push_back(' ');
    out.push_back('{');
    const auto& members = query.groups[g].members;
    for (size_t m = 0; m < members.size(); ++m) {
      if (m) out.push_back('|');
      out += members[m].joined();
    }
    out.push_back('}');
  }
  return out;
}

void write_structured(const std::vector<StructuredQuery>& queries, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write structured query file: " + path);
  for (const auto& q : queries) out << q.query_id << '\t' << format_structured(q) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

StructuredQuery parse_structured(const std::string& query_id, std::string_view body) {
  StructuredQuery sq;
  sq.query_id = query_id;
  size_t pos = 0;
  while (pos < body.size()) {
    if (body[pos] == ' ') {
      ++pos;
      continue;
    }
    if (body[pos] != '{') throw std::runtime_error("expected '{' in structured query body");
    const auto close = body.find('}', pos);
    if (close == std::string_view::npos)
      throw std::runtime_error("unterminated '{' in structured query body");
    std::string_view inner = body.substr(pos + 1, close - pos - 1);
    SynonymGroup group;
    size_t start = 0;
    for (size_t i = 0; i <= inner.size(); ++i) {
      if (i == inner.size() || inner[i] == '|') {
        const auto tokens = split_spaces(inner.substr(start, i - start));
        if (!tokens.empty()) group.members.push_back(Candidate{tokens});
        start = i + 1;
      }
    }
    if (group.members.empty())
      throw std::runtime_error("empty synonym group in structured query body");
    sq.groups.push_back(std::move(group));
    pos = close + 1;
  }
  if (sq.groups.empty()) throw std::runtime_error("structured query has no groups");
  return sq;
}

bool looks_structured(std::string_view body) {
  for (char c : body) {
    if (c == ' ') continue;
    return c == '{';
  }
  return false;
}

const char* choice_source_name(ChoiceSource src) {
  switch (src) {
    case ChoiceSource::kDictionary:
      return "dict";
    case ChoiceSource::kSupport:
      return "support";
    case ChoiceSource::kTransliterationFallback:
      return "translit";
    case ChoiceSource::kUntranslated:
      return "untranslated";
  }
  return "unknown";
}

std::string format_diagnostics(const TranslationResult& result) {
  std::string out;
  char prob[32];
  for (const auto& term : result.terms) {
    for (const auto& sc : term.diagnostics) {
      std::snprintf(prob, sizeof(prob), "%.6f", sc.probability);
      out += result.query_id + "\t" + term.source + "\t" + sc.form + "\t" +
             choice_source_name(sc.list) + "\t" + prob + "\t" + (sc.chosen ? "1" : "0") + "\n";
    }
    if (term.diagnostics.empty()) {
      out += result.query_id + "\t" + term.source + "\t" + term.source +
             "\tuntranslated\t0.000000\t1\n";
    }
  }
  return out;
}

}  // namespace mesc
