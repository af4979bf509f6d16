#include "mesc/corpus.hpp"

#include <fstream>
#include <stdexcept>
#include <unordered_set>

namespace mesc {

DocumentCollection make_collection(
    const std::vector<std::pair<std::string, std::vector<std::string>>>& docs) {
  DocumentCollection coll;
  std::unordered_set<std::string> seen_ids;
  for (const auto& [doc_id, tokens] : docs) {
    if (!seen_ids.insert(doc_id).second)
      throw std::runtime_error("duplicate doc_id: " + doc_id);
    Document doc;
    doc.id = doc_id;
    doc.tokens.reserve(tokens.size());
    for (const auto& tok : tokens) doc.tokens.push_back(coll.vocab.add(tok));
    coll.docs.push_back(std::move(doc));
  }
  return coll;
}

DocumentCollection ingest_corpus(const std::string& path, const TokenizerConfig& cfg,
                                 std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);

  DocumentCollection coll;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0)
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": malformed record, expected doc_id<TAB>text");
    std::string doc_id = line.substr(0, tab);
    if (!seen_ids.insert(doc_id).second)
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": duplicate doc_id: " + doc_id);
    std::vector<std::string> tokens = tokenize(std::string_view(line).substr(tab + 1), cfg);
    if (tokens.empty()) {
      if (warnings)
        warnings->push_back("line " + std::to_string(line_no) + ": document '" + doc_id +
                            "' has no tokens, skipped");
      continue;
    }
    Document doc;
    doc.id = std::move(doc_id);
    doc.tokens.reserve(tokens.size());
    for (const auto& tok : tokens) doc.tokens.push_back(coll.vocab.add(tok));
    coll.docs.push_back(std::move(doc));
  }
  if (coll.docs.empty()) throw std::runtime_error("empty corpus: " + path);
  return coll;
}

}  // namespace mesc
