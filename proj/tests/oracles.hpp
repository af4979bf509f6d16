// Independent brute-force reference implementations used to check the
// library. Everything here is written from the definitions directly —
// memoized recursion for edit distance, naive position scans for window
// counts, literal set/loop evaluations for the scoring formulas — and must
// stay decoupled from the code under test.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mesc/unicode.hpp"

namespace oracle {

// ---- Edit distance: memoized recursion over code points ----

inline size_t med_rec(const std::u32string& s, const std::u32string& t, size_t i, size_t j,
                      std::vector<std::vector<int>>& memo) {
  if (i == 0) return j;
  if (j == 0) return i;
  int& m = memo[i][j];
  if (m >= 0) return static_cast<size_t>(m);
  size_t best;
  if (s[i - 1] == t[j - 1]) {
    best = med_rec(s, t, i - 1, j - 1, memo);
  } else {
    best = 1 + std::min({med_rec(s, t, i - 1, j - 1, memo), med_rec(s, t, i - 1, j, memo),
                         med_rec(s, t, i, j - 1, memo)});
  }
  m = static_cast<int>(best);
  return best;
}

inline size_t med(const std::string& a, const std::string& b) {
  const std::u32string s = mesc::utf8_decode(a);
  const std::u32string t = mesc::utf8_decode(b);
  std::vector<std::vector<int>> memo(s.size() + 1, std::vector<int>(t.size() + 1, -1));
  return med_rec(s, t, s.size(), t.size(), memo);
}

// ---- Windowed pair counts: naive double position loop ----

using PairCounts = std::map<std::pair<std::string, std::string>, uint64_t>;

inline std::pair<std::string, std::string> canonical(std::string a, std::string b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

inline PairCounts window_pairs(const std::vector<std::vector<std::string>>& docs,
                               size_t window) {
  PairCounts counts;
  for (const auto& toks : docs)
    for (size_t i = 0; i < toks.size(); ++i)
      for (size_t j = i + 1; j < toks.size() && j - i <= window; ++j)
        ++counts[canonical(toks[i], toks[j])];
  return counts;
}

inline uint64_t pair_count(const PairCounts& counts, const std::string& a,
                           const std::string& b) {
  auto it = counts.find(canonical(a, b));
  return it == counts.end() ? 0 : it->second;
}

inline uint64_t total_mass(const PairCounts& counts) {
  uint64_t m = 0;
  for (const auto& [k, v] : counts) m += v;
  return m;
}

// ---- Query-translation instance shared by the formula oracles ----

struct Instance {
  // Per query term: rank-ordered dictionary candidates as token sequences.
  std::vector<std::vector<std::vector<std::string>>> dict;
  // Per query term: support candidates (single tokens), filled by eq1.
  std::vector<std::vector<std::string>> support;
  std::vector<std::string> vocabulary;
  PairCounts counts;
};

// Eq. 1, evaluated literally: v is a support candidate of term i iff some
// anchor token of some candidate of term i (length >= min_len code points)
// is within edit distance 1..2 of v, and v co-occurs with some constituent
// token of some dictionary candidate of a different term. Surfaces equal to
// a single-token candidate of the same term are excluded.
inline std::vector<std::set<std::string>> eq1_support(const Instance& inst, size_t min_len) {
  const size_t m = inst.dict.size();
  std::vector<std::set<std::string>> result(m);
  for (size_t i = 0; i < m; ++i) {
    std::set<std::string> own_surfaces;
    for (const auto& cand : inst.dict[i])
      if (cand.size() == 1) own_surfaces.insert(cand[0]);
    for (const auto& v : inst.vocabulary) {
      if (own_surfaces.count(v)) continue;
      bool near_anchor = false;
      for (const auto& cand : inst.dict[i]) {
        for (const auto& anchor : cand) {
          if (mesc::utf8_decode(anchor).size() < min_len) continue;
          const size_t d = med(v, anchor);
          if (d >= 1 && d <= 2) {
            near_anchor = true;
            break;
          }
        }
        if (near_anchor) break;
      }
      if (!near_anchor) continue;
      bool adjacent = false;
      for (size_t other = 0; other < m && !adjacent; ++other) {
        if (other == i) continue;
        for (const auto& cand : inst.dict[other]) {
          for (const auto& u : cand) {
            if (pair_count(inst.counts, v, u) > 0) {
              adjacent = true;
              break;
            }
          }
          if (adjacent) break;
        }
      }
      if (adjacent) result[i].insert(v);
    }
  }
  return result;
}

// Joint probability of two token sequences: max over token pairs.
inline double joint(const Instance& inst, const std::vector<std::string>& a,
                    const std::vector<std::string>& b) {
  const uint64_t mass = total_mass(inst.counts);
  if (mass == 0) return 0.0;
  double best = 0.0;
  for (const auto& x : a)
    for (const auto& y : b)
      best = std::max(best, static_cast<double>(pair_count(inst.counts, x, y)) /
                                static_cast<double>(mass));
  return best;
}

// Eq. 6: dictionary candidate scores, the full four-level loop.
inline std::vector<std::vector<double>> eq6_scores(const Instance& inst) {
  const size_t m = inst.dict.size();
  std::vector<std::vector<double>> scores(m);
  for (size_t i = 0; i < m; ++i) {
    scores[i].resize(inst.dict[i].size(), 0.0);
    for (size_t j = 0; j < inst.dict[i].size(); ++j) {
      double sum = 0.0;
      for (size_t ip = 0; ip < m; ++ip) {
        if (ip == i) continue;
        for (size_t jp = 0; jp < inst.dict[ip].size(); ++jp)
          sum += joint(inst, inst.dict[i][j], inst.dict[ip][jp]);
        for (size_t jp = 0; jp < inst.support[ip].size(); ++jp)
          sum += joint(inst, inst.dict[i][j], {inst.support[ip][jp]});
      }
      scores[i][j] = sum;
    }
  }
  return scores;
}

// Eq. 7: support candidate scores against other terms' dictionary
// candidates only.
inline std::vector<std::vector<double>> eq7_scores(const Instance& inst) {
  const size_t m = inst.dict.size();
  std::vector<std::vector<double>> scores(m);
  for (size_t i = 0; i < m; ++i) {
    scores[i].resize(inst.support[i].size(), 0.0);
    for (size_t j = 0; j < inst.support[i].size(); ++j) {
      double sum = 0.0;
      for (size_t ip = 0; ip < m; ++ip) {
        if (ip == i) continue;
        for (size_t jp = 0; jp < inst.dict[ip].size(); ++jp)
          sum += joint(inst, {inst.support[i][j]}, inst.dict[ip][jp]);
      }
      scores[i][j] = sum;
    }
  }
  return scores;
}

// ---- Retrieval evaluation: direct formula evaluations ----

struct Judged {
  // query -> relevant doc ids (already binarized)
  std::map<std::string, std::set<std::string>> relevant;
};

inline double ap(const std::vector<std::string>& ranking, const std::set<std::string>& rel) {
  if (rel.empty()) return 0.0;
  double sum = 0.0;
  size_t seen = 0;
  for (size_t r = 0; r < ranking.size(); ++r) {
    if (rel.count(ranking[r])) {
      ++seen;
      sum += static_cast<double>(seen) / static_cast<double>(r + 1);
    }
  }
  return sum / static_cast<double>(rel.size());
}

inline double p_at_k(const std::vector<std::string>& ranking, const std::set<std::string>& rel,
                     size_t k) {
  size_t hits = 0;
  for (size_t r = 0; r < std::min(k, ranking.size()); ++r)
    if (rel.count(ranking[r])) ++hits;
  return static_cast<double>(hits) / static_cast<double>(k);
}

inline std::array<double, 11> interp_pr(const std::vector<std::string>& ranking,
                                        const std::set<std::string>& rel) {
  std::array<double, 11> out{};
  size_t seen = 0;
  std::vector<std::pair<double, double>> rp;
  for (size_t r = 0; r < ranking.size(); ++r) {
    if (rel.count(ranking[r])) {
      ++seen;
      rp.emplace_back(static_cast<double>(seen) / static_cast<double>(rel.size()),
                      static_cast<double>(seen) / static_cast<double>(r + 1));
    }
  }
  for (int level = 0; level <= 10; ++level) {
    double best = 0.0;
    for (const auto& [recall, prec] : rp)
      if (recall + 1e-12 >= static_cast<double>(level) / 10.0) best = std::max(best, prec);
    out[static_cast<size_t>(level)] = best;
  }
  return out;
}

}  // namespace oracle
