#include "mesc/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace mesc {

std::string Candidate::joined() const {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

void BilingualDictionary::add_entry(std::string_view source, std::vector<Candidate> candidates) {
  auto [it, inserted] = entries_.try_emplace(std::string(source));
  if (inserted) order_.push_back(it->first);
  auto& list = it->second;
  for (auto& cand : candidates) {
    if (std::find(list.begin(), list.end(), cand) != list.end()) {
      warnings_.push_back("duplicate candidate '" + cand.joined() + "' for '" + it->first +
                          "' dropped");
      continue;
    }
    list.push_back(std::move(cand));
  }
}

BilingualDictionary BilingualDictionary::load(const std::string& path, const TokenizerConfig& cfg,
                                              std::string name) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open dictionary file: " + path);

  BilingualDictionary dict;
  dict.name_ = name.empty() ? path : std::move(name);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0)
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": malformed line, expected source<TAB>cand1|cand2|...");
    const std::string source = normalize_term(line.substr(0, tab), cfg);
    std::vector<Candidate> candidates;
    std::string_view rest = std::string_view(line).substr(tab + 1);
    size_t start = 0;
    for (size_t i = 0; i <= rest.size(); ++i) {
      if (i == rest.size() || rest[i] == '|') {
        std::string_view field = rest.substr(start, i - start);
        start = i + 1;
        Candidate cand;
        cand.tokens = tokenize(field, cfg);
        if (!cand.tokens.empty()) candidates.push_back(std::move(cand));
      }
    }
    if (candidates.empty())
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": entry '" + source + "' has no candidates");
    if (dict.entries_.count(source))
      dict.warnings_.push_back("line " + std::to_string(line_no) + ": duplicate source term '" +
                               source + "', candidates appended");
    dict.add_entry(source, std::move(candidates));
  }
  if (dict.order_.empty()) dict.warnings_.push_back("dictionary '" + dict.name_ + "' is empty");
  return dict;
}

const std::vector<Candidate>& BilingualDictionary::lookup(std::string_view source_term) const {
  static const std::vector<Candidate> kEmpty;
  auto it = entries_.find(std::string(source_term));
  return it == entries_.end() ? kEmpty : it->second;
}

DictionaryStats BilingualDictionary::stats() const {
  if (order_.empty()) throw std::runtime_error("dictionary is empty");
  double sum = 0.0;
  for (const auto& source : order_) sum += static_cast<double>(entries_.at(source).size());
  const double mean = sum / static_cast<double>(order_.size());
  double sq = 0.0;
  for (const auto& source : order_) {
    const double d = static_cast<double>(entries_.at(source).size()) - mean;
    sq += d * d;
  }
  return DictionaryStats{mean, sq / static_cast<double>(order_.size())};
}

}  // namespace mesc
