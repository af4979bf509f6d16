#include "mesc/edit_distance.hpp"

#include <algorithm>

#include "mesc/unicode.hpp"

namespace mesc {

size_t med(std::u32string_view s, std::u32string_view t) {
  const size_t n = s.size(), m = t.size();
  if (n == 0) return m;
  if (m == 0) return n;
  std::vector<size_t> prev(m + 1), cur(m + 1);
  for (size_t j = 0; j <= m; ++j) prev[j] = j;
  for (size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    for (size_t j = 1; j <= m; ++j) {
      const size_t cost = (s[i - 1] == t[j - 1]) ? 0 : 1;
      cur[j] = std::min({prev[j - 1] + cost, prev[j] + 1, cur[j - 1] + 1});
    }
    prev.swap(cur);
  }
  return prev[m];
}

size_t med(std::string_view s, std::string_view t) {
  return med(utf8_decode(s), utf8_decode(t));
}

bool within_distance(std::u32string_view s, std::u32string_view t, size_t k) {
  if (s.size() > t.size()) std::swap(s, t);
  const size_t n = s.size(), m = t.size();
  if (m - n > k) return false;
  if (k == 0) return s == t;

  const size_t inf = k + 1;
  std::vector<size_t> prev(m + 1, inf), cur(m + 1, inf);
  for (size_t j = 0; j <= std::min(k, m); ++j) prev[j] = j;
  for (size_t i = 1; i <= n; ++i) {
    const size_t lo = (i > k) ? i - k : 0;
    const size_t hi = std::min(m, i + k);
    size_t row_min = inf;
    if (lo == 0) {
      cur[0] = i;
      row_min = i;
    } else {
      cur[lo - 1] = inf;
    }
    for (size_t j = std::max<size_t>(lo, 1); j <= hi; ++j) {
      const size_t cost = (s[i - 1] == t[j - 1]) ? 0 : 1;
      size_t best = prev[j - 1] + cost;
      if (j <= i - 1 + k && prev[j] + 1 < best) best = prev[j] + 1;
      if (cur[j - 1] + 1 < best) best = cur[j - 1] + 1;
      if (best > inf) best = inf;
      cur[j] = best;
      if (best < row_min) row_min = best;
    }
    if (row_min > k) return false;
    prev.swap(cur);
  }
  return prev[m] <= k;
}

bool within_distance(std::string_view s, std::string_view t, size_t k) {
  return within_distance(utf8_decode(s), utf8_decode(t), k);
}

NeighborFinder::NeighborFinder(const std::vector<std::string>& terms, size_t min_query_len)
    : min_query_len_(min_query_len) {
  for (const auto& term : terms) {
    std::u32string cps = utf8_decode(term);
    const size_t len = cps.size();
    if (buckets_.size() <= len) buckets_.resize(len + 1);
    buckets_[len].push_back(Entry{std::move(cps), &term});
  }
}

std::vector<NeighborHit> NeighborFinder::neighbors(std::string_view query) const {
  std::vector<NeighborHit> hits;
  const std::u32string q = utf8_decode(query);
  if (q.size() < min_query_len_) return hits;
  const size_t lo = (q.size() > 2) ? q.size() - 2 : 0;
  const size_t hi = std::min(buckets_.empty() ? 0 : buckets_.size() - 1, q.size() + 2);
  for (size_t len = lo; len <= hi && len < buckets_.size(); ++len) {
    for (const auto& entry : buckets_[len]) {
      if (entry.codepoints == q) continue;  // distance 0
      if (!within_distance(q, entry.codepoints, 2)) continue;
      const int d = within_distance(q, entry.codepoints, 1) ? 1 : 2;
      hits.push_back(NeighborHit{*entry.term, d});
    }
  }
  std::sort(hits.begin(), hits.end(), [](const NeighborHit& x, const NeighborHit& y) {
    return x.distance != y.distance ? x.distance < y.distance : x.term < y.term;
  });
  return hits;
}

std::vector<NeighborHit> neighbors(const std::vector<std::string>& vocabulary,
                                   std::string_view query, size_t min_query_len) {
  return NeighborFinder(vocabulary, min_query_len).neighbors(query);
}

}  // namespace mesc
