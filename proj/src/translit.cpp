#include "mesc/translit.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <unordered_set>

#include "mesc/unicode.hpp"

namespace mesc {

namespace {

std::vector<std::string> split_pipe(std::string_view s) {
  std::vector<std::string> parts;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == '|') {
      parts.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

}  // namespace

void TransliterationTable::add_rule(std::string_view grapheme, bool is_vowel,
                                    std::vector<std::string> alternatives) {
  const std::string key = nfc(grapheme);
  if (rules_.count(key)) throw std::runtime_error("duplicate grapheme rule: " + key);
  if (alternatives.empty()) throw std::runtime_error("empty alternative list for: " + key);
  for (auto& alt : alternatives) alt = nfc(alt);
  max_key_codepoints_ = std::max(max_key_codepoints_, utf8_decode(key).size());
  rules_.emplace(key, Rule{is_vowel, std::move(alternatives)});
}

TransliterationTable TransliterationTable::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open transliteration rules: " + path);
  TransliterationTable table;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto err = [&](const std::string& msg) {
      return std::runtime_error(path + ":" + std::to_string(line_no) + ": " + msg);
    };
    const auto sp1 = line.find(' ');
    if (sp1 == std::string::npos) throw err("malformed rule line");
    const std::string cls = line.substr(0, sp1);
    if (cls != "C" && cls != "V") throw err("unknown grapheme class '" + cls + "'");
    const auto sp2 = line.find(' ', sp1 + 1);
    if (sp2 == std::string::npos || sp2 == sp1 + 1) throw err("malformed rule line");
    const std::string grapheme = line.substr(sp1 + 1, sp2 - sp1 - 1);
    const std::string rhs = line.substr(sp2 + 1);
    try {
      if (cls == "C") {
        if (rhs.empty()) throw err("consonant mapping must not be empty");
        table.add_rule(grapheme, false, {rhs});
      } else {
        table.add_rule(grapheme, true, split_pipe(rhs));
      }
    } catch (const std::runtime_error& e) {
      throw err(e.what());
    }
  }
  return table;
}

const TransliterationTable::Rule* TransliterationTable::find(std::string_view grapheme) const {
  auto it = rules_.find(std::string(grapheme));
  return it == rules_.end() ? nullptr : &it->second;
}

std::vector<TransliterationTable::Segment> TransliterationTable::segment(
    std::string_view term) const {
  const std::u32string cps = utf8_decode(nfc(term));
  std::vector<Segment> segments;
  size_t pos = 0;
  while (pos < cps.size()) {
    const size_t max_len = std::min(max_key_codepoints_ ? max_key_codepoints_ : 1,
                                    cps.size() - pos);
    bool matched = false;
    for (size_t len = max_len; len >= 1; --len) {
      const std::string key = utf8_encode(std::u32string_view(cps).substr(pos, len));
      if (const Rule* rule = find(key)) {
        segments.push_back(Segment{key, rule});
        pos += len;
        matched = true;
        break;
      }
    }
    if (!matched) {
      segments.push_back(
          Segment{utf8_encode(std::u32string_view(cps).substr(pos, 1)), nullptr});
      ++pos;
    }
  }
  return segments;
}

VariantExpansion generate_variants(std::string_view term, const TransliterationTable& table,
                                   size_t cap) {
  if (cap < 1) throw std::invalid_argument("cap must be >= 1");
  const auto segments = table.segment(term);

  VariantExpansion out;
  for (const auto& seg : segments) {
    if (!seg.rule &&
        std::find(out.unknown_graphemes.begin(), out.unknown_graphemes.end(), seg.grapheme) ==
            out.unknown_graphemes.end())
      out.unknown_graphemes.push_back(seg.grapheme);
  }

  // Depth-first over alternative choices, leftmost grapheme most
  // significant, earlier alternatives first. The leaf budget bounds the walk
  // when empty alternatives collapse many combinations onto few variants.
  std::vector<std::string> ordered;
  std::unordered_set<std::string> seen;
  std::string assembled;
  size_t leaf_budget = std::max<size_t>(cap * 64, 4096);
  const std::function<bool(size_t)> expand = [&](size_t pos) -> bool {
    if (pos == segments.size()) {
      if (leaf_budget == 0) {
        out.truncated = true;
        return false;
      }
      --leaf_budget;
      std::string variant = nfc(assembled);
      if (seen.insert(variant).second) {
        if (ordered.size() == cap) {
          out.truncated = true;
          return false;
        }
        ordered.push_back(std::move(variant));
      }
      return true;
    }
    const auto& seg = segments[pos];
    const size_t saved = assembled.size();
    if (!seg.rule) {
      assembled += seg.grapheme;
      const bool keep_going = expand(pos + 1);
      assembled.resize(saved);
      return keep_going;
    }
    for (const auto& alt : seg.rule->alternatives) {
      assembled += alt;
      const bool keep_going = expand(pos + 1);
      assembled.resize(saved);
      if (!keep_going) return false;
    }
    return true;
  };
  expand(0);
  out.variants = std::move(ordered);
  return out;
}

TranslitSupport transliterate_oov(std::string_view term, const TransliterationTable& table,
                                  const Vocabulary& vocabulary, size_t cap) {
  const VariantExpansion expansion = generate_variants(term, table, cap);
  TranslitSupport support;
  for (const auto& v : expansion.variants)
    if (vocabulary.contains(v)) support.candidates.push_back(v);
  if (support.candidates.empty() && !expansion.variants.empty()) {
    support.candidates.push_back(expansion.variants.front());
    support.unverified = true;
  }
  return support;
}

}  // namespace mesc
