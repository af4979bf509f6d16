#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mesc {

/// Unit-cost Levenshtein distance (insert/delete/substitute) over Unicode
/// code points. Full dynamic program, O(|s|*|t|).
size_t med(std::u32string_view s, std::u32string_view t);
size_t med(std::string_view s, std::string_view t);

/// Banded check for med(s, t) <= k in O(k * min(|s|, |t|)) work. Agrees with
/// med exactly.
bool within_distance(std::u32string_view s, std::u32string_view t, size_t k);
bool within_distance(std::string_view s, std::string_view t, size_t k);

struct NeighborHit {
  std::string term;
  int distance;  // 1 or 2; distance-0 self matches are excluded
};

/// Retrieves all vocabulary terms within edit distance 1..2 of a query.
/// Terms are length-bucketed by code point count so only candidates with a
/// length difference <= 2 are checked. Queries shorter than min_query_len
/// code points yield no neighbors (short stems are mostly noise).
/// Holds pointers into the term vector it was built from; that vector must
/// outlive the finder.
class NeighborFinder {
 public:
  explicit NeighborFinder(const std::vector<std::string>& terms, size_t min_query_len = 3);

  /// Results ordered by (distance ascending, term lexicographic).
  std::vector<NeighborHit> neighbors(std::string_view query) const;

 private:
  struct Entry {
    std::u32string codepoints;
    const std::string* term;
  };
  std::vector<std::vector<Entry>> buckets_;  // by code point length
  size_t min_query_len_;
};

/// One-shot convenience over an ad-hoc term set.
std::vector<NeighborHit> neighbors(const std::vector<std::string>& vocabulary,
                                   std::string_view query, size_t min_query_len = 3);

}  // namespace mesc
