#include "mesc/cooccurrence.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <map>
#include <stdexcept>

namespace mesc {

namespace {

constexpr char kMagic[8] = {'M', 'E', 'S', 'C', 'I', 'D', 'X', '\0'};
constexpr uint32_t kFormatVersion = 1;

inline uint64_t pair_key(TermId a, TermId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<uint64_t>(a) << 32) | b;
}

uint64_t fnv1a(const char* data, size_t n) {
  uint64_t h = 1469598103934665603ull;
  for (size_t i = 0; i < n; ++i) {
    h ^= static_cast<unsigned char>(data[i]);
    h *= 1099511628211ull;
  }
  return h;
}

struct ByteWriter {
  std::string buf;
  void u32(uint32_t v) {
    for (int i = 0; i < 4; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  }
  void u64(uint64_t v) {
    for (int i = 0; i < 8; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  }
  void str(const std::string& s) {
    u32(static_cast<uint32_t>(s.size()));
    buf.append(s);
  }
};

struct ByteReader {
  const std::string& buf;
  size_t pos = 0;
  explicit ByteReader(const std::string& b) : buf(b) {}
  void need(size_t n) const {
    if (pos + n > buf.size()) throw std::runtime_error("index file truncated");
  }
  uint32_t u32() {
    need(4);
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i)
      v |= static_cast<uint32_t>(static_cast<unsigned char>(buf[pos + i])) << (8 * i);
    pos += 4;
    return v;
  }
  uint64_t u64() {
    need(8);
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i)
      v |= static_cast<uint64_t>(static_cast<unsigned char>(buf[pos + i])) << (8 * i);
    pos += 8;
    return v;
  }
  std::string str() {
    uint32_t n = u32();
    need(n);
    std::string s = buf.substr(pos, n);
    pos += n;
    return s;
  }
};

}  // namespace

CooccurrenceIndex CooccurrenceIndex::build(const DocumentCollection& coll, uint32_t window) {
  if (window < 1) throw std::invalid_argument("window must be >= 1");
  if (coll.docs.empty()) throw std::invalid_argument("collection has no documents");
  CooccurrenceIndex idx;
  idx.window_ = window;
  idx.vocab_ = coll.vocab;
  const size_t v = coll.vocab.size();
  idx.unigram_counts_.assign(v, 0);
  idx.postings_.assign(v, {});

  std::unordered_map<uint64_t, uint64_t> counts;
  uint64_t total_len = 0;
  for (const auto& doc : coll.docs) {
    const uint32_t doc_idx = static_cast<uint32_t>(idx.doc_ids_.size());
    idx.doc_ids_.push_back(doc.id);
    idx.doc_lengths_.push_back(static_cast<uint32_t>(doc.tokens.size()));
    idx.doc_index_.emplace(doc.id, doc_idx);
    total_len += doc.tokens.size();

    std::map<TermId, uint32_t> tf;  // ordered so postings get ascending term ids per doc
    const auto& toks = doc.tokens;
    for (size_t i = 0; i < toks.size(); ++i) {
      ++tf[toks[i]];
      const size_t jmax = std::min(toks.size(), i + 1 + window);
      for (size_t j = i + 1; j < jmax; ++j) ++counts[pair_key(toks[i], toks[j])];
    }
    for (const auto& [term, freq] : tf) {
      idx.unigram_counts_[term] += freq;
      idx.postings_[term].push_back(Posting{doc_idx, freq});
    }
  }
  idx.avg_doc_length_ = static_cast<double>(total_len) / static_cast<double>(idx.doc_ids_.size());

  idx.pairs_.reserve(counts.size());
  for (const auto& [key, count] : counts)
    idx.pairs_.push_back(PairCount{static_cast<TermId>(key >> 32),
                                   static_cast<TermId>(key & 0xFFFFFFFFu), count});
  std::sort(idx.pairs_.begin(), idx.pairs_.end(), [](const PairCount& x, const PairCount& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  });
  idx.finalize_pairs();
  return idx;
}

void CooccurrenceIndex::finalize_pairs() {
  pair_lookup_.clear();
  pair_lookup_.reserve(pairs_.size());
  total_pair_mass_ = 0;
  for (const auto& p : pairs_) {
    pair_lookup_.emplace(pair_key(p.a, p.b), p.count);
    total_pair_mass_ += p.count;
  }
}

uint64_t CooccurrenceIndex::pair_count(TermId a, TermId b) const {
  auto it = pair_lookup_.find(pair_key(a, b));
  return it == pair_lookup_.end() ? 0 : it->second;
}

bool CooccurrenceIndex::cooccurs(std::string_view a, std::string_view b) const {
  auto ia = vocab_.find(a);
  auto ib = vocab_.find(b);
  if (!ia || !ib) return false;
  return pair_count(*ia, *ib) > 0;
}

double CooccurrenceIndex::joint_probability(TermId a, TermId b) const {
  if (total_pair_mass_ == 0) throw std::runtime_error("no co-occurrence mass");
  return static_cast<double>(pair_count(a, b)) / static_cast<double>(total_pair_mass_);
}

double CooccurrenceIndex::joint_probability(std::string_view a, std::string_view b) const {
  if (total_pair_mass_ == 0) throw std::runtime_error("no co-occurrence mass");
  auto ia = vocab_.find(a);
  auto ib = vocab_.find(b);
  if (!ia || !ib) return 0.0;
  return joint_probability(*ia, *ib);
}

std::optional<uint32_t> CooccurrenceIndex::doc_index(std::string_view doc_id) const {
  auto it = doc_index_.find(std::string(doc_id));
  if (it == doc_index_.end()) return std::nullopt;
  return it->second;
}

void CooccurrenceIndex::save(const std::string& path) const {
  ByteWriter w;
  w.buf.append(kMagic, sizeof(kMagic));
  w.u32(kFormatVersion);
  w.u32(window_);
  w.u32(static_cast<uint32_t>(vocab_.size()));
  w.u32(doc_count());
  for (const auto& term : vocab_.terms()) w.str(term);
  for (uint32_t d = 0; d < doc_count(); ++d) {
    w.str(doc_ids_[d]);
    w.u32(doc_lengths_[d]);
  }
  for (uint64_t c : unigram_counts_) w.u64(c);
  w.u64(pairs_.size());
  for (const auto& p : pairs_) {
    w.u32(p.a);
    w.u32(p.b);
    w.u64(p.count);
  }
  for (const auto& plist : postings_) {
    w.u32(static_cast<uint32_t>(plist.size()));
    for (const auto& post : plist) {
      w.u32(post.doc);
      w.u32(post.tf);
    }
  }
  const uint64_t checksum = fnv1a(w.buf.data(), w.buf.size());
  w.u64(checksum);

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write index file: " + path);
  out.write(w.buf.data(), static_cast<std::streamsize>(w.buf.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

CooccurrenceIndex CooccurrenceIndex::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open index file: " + path);
  std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  if (buf.size() < sizeof(kMagic) + 8 || std::memcmp(buf.data(), kMagic, sizeof(kMagic)) != 0)
    throw std::runtime_error("not an index file: " + path);
  const size_t payload = buf.size() - 8;
  uint64_t stored = 0;
  for (int i = 0; i < 8; ++i)
    stored |= static_cast<uint64_t>(static_cast<unsigned char>(buf[payload + i])) << (8 * i);
  if (fnv1a(buf.data(), payload) != stored)
    throw std::runtime_error("index file checksum mismatch: " + path);

  ByteReader r(buf);
  r.pos = sizeof(kMagic);
  const uint32_t version = r.u32();
  if (version != kFormatVersion)
    throw std::runtime_error("index format version mismatch: found " + std::to_string(version) +
                             ", expected " + std::to_string(kFormatVersion));

  CooccurrenceIndex idx;
  idx.window_ = r.u32();
  const uint32_t vocab_size = r.u32();
  const uint32_t docs = r.u32();
  for (uint32_t i = 0; i < vocab_size; ++i) idx.vocab_.add(r.str());
  uint64_t total_len = 0;
  for (uint32_t d = 0; d < docs; ++d) {
    idx.doc_ids_.push_back(r.str());
    idx.doc_lengths_.push_back(r.u32());
    idx.doc_index_.emplace(idx.doc_ids_.back(), d);
    total_len += idx.doc_lengths_.back();
  }
  idx.avg_doc_length_ = static_cast<double>(total_len) / static_cast<double>(docs);
  idx.unigram_counts_.resize(vocab_size);
  for (uint32_t i = 0; i < vocab_size; ++i) idx.unigram_counts_[i] = r.u64();
  const uint64_t n_pairs = r.u64();
  idx.pairs_.reserve(n_pairs);
  for (uint64_t i = 0; i < n_pairs; ++i) {
    PairCount p;
    p.a = r.u32();
    p.b = r.u32();
    p.count = r.u64();
    idx.pairs_.push_back(p);
  }
  idx.postings_.resize(vocab_size);
  for (uint32_t t = 0; t < vocab_size; ++t) {
    const uint32_t n = r.u32();
    idx.postings_[t].reserve(n);
    for (uint32_t i = 0; i < n; ++i) {
      Posting post;
      post.doc = r.u32();
      post.tf = r.u32();
      idx.postings_[t].push_back(post);
    }
  }
  idx.finalize_pairs();
  return idx;
}

}  // namespace mesc
