#include "mesc/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mesc {

namespace {

std::string fmt4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string fmt6(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream ss(line);
  std::string f;
  while (ss >> f) fields.push_back(f);
  return fields;
}

}  // namespace

void Qrels::add(const std::string& query_id, const std::string& doc_id, int grade) {
  auto& docs = judgments_[query_id];
  if (!docs.emplace(doc_id, grade).second)
    throw std::runtime_error("duplicate qrels pair: " + query_id + " / " + doc_id);
}

bool Qrels::is_relevant(const std::string& query_id, const std::string& doc_id) const {
  auto it = judgments_.find(query_id);
  if (it == judgments_.end()) return false;
  auto jt = it->second.find(doc_id);
  return jt != it->second.end() && jt->second > 0;
}

size_t Qrels::relevant_count(const std::string& query_id) const {
  auto it = judgments_.find(query_id);
  if (it == judgments_.end()) return 0;
  size_t n = 0;
  for (const auto& [doc, grade] : it->second)
    if (grade > 0) ++n;
  return n;
}

double average_precision(const RankedList& run, const Qrels& qrels) {
  const size_t total_relevant = qrels.relevant_count(run.query_id);
  if (total_relevant == 0)
    throw std::invalid_argument("query has no relevant documents: " + run.query_id);
  size_t relevant_seen = 0;
  double sum = 0.0;
  for (size_t r = 0; r < run.hits.size(); ++r) {
    if (qrels.is_relevant(run.query_id, run.hits[r].doc_id)) {
      ++relevant_seen;
      sum += static_cast<double>(relevant_seen) / static_cast<double>(r + 1);
    }
  }
  return sum / static_cast<double>(total_relevant);
}

double precision_at_k(const RankedList& run, const Qrels& qrels, size_t k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  size_t relevant = 0;
  const size_t upto = std::min(k, run.hits.size());
  for (size_t r = 0; r < upto; ++r)
    if (qrels.is_relevant(run.query_id, run.hits[r].doc_id)) ++relevant;
  return static_cast<double>(relevant) / static_cast<double>(k);
}

std::array<double, 11> interpolated_pr(const RankedList& run, const Qrels& qrels) {
  const size_t total_relevant = qrels.relevant_count(run.query_id);
  if (total_relevant == 0)
    throw std::invalid_argument("query has no relevant documents: " + run.query_id);
  // Precision/recall after every rank, then max precision at recall >= level.
  std::vector<std::pair<double, double>> points;  // (recall, precision)
  size_t relevant_seen = 0;
  for (size_t r = 0; r < run.hits.size(); ++r) {
    if (qrels.is_relevant(run.query_id, run.hits[r].doc_id)) {
      ++relevant_seen;
      points.emplace_back(static_cast<double>(relevant_seen) / static_cast<double>(total_relevant),
                          static_cast<double>(relevant_seen) / static_cast<double>(r + 1));
    }
  }
  std::array<double, 11> out{};
  for (int level = 0; level <= 10; ++level) {
    const double r = static_cast<double>(level) / 10.0;
    double best = 0.0;
    for (const auto& [recall, precision] : points)
      if (recall >= r - 1e-12) best = std::max(best, precision);
    out[static_cast<size_t>(level)] = best;
  }
  return out;
}

EvalReport evaluate_run(const std::vector<RankedList>& run, const Qrels& qrels) {
  EvalReport report;
  std::map<std::string, const RankedList*> by_id;
  for (const auto& list : run) {
    by_id[list.query_id] = &list;
    if (!qrels.has_query(list.query_id))
      report.warnings.push_back("query '" + list.query_id + "' has no judgments, ignored");
  }

  size_t evaluated = 0;
  for (const auto& [query_id, docs] : qrels.judgments()) {
    size_t relevant = 0;
    for (const auto& [doc, grade] : docs)
      if (grade > 0) ++relevant;
    if (relevant == 0) {
      report.warnings.push_back("query '" + query_id + "' has no relevant documents, excluded");
      continue;
    }
    static const RankedList kEmpty{};
    const RankedList* list = &kEmpty;
    if (auto it = by_id.find(query_id); it != by_id.end()) list = it->second;
    RankedList scoped = *list;
    scoped.query_id = query_id;

    QueryEval qe;
    qe.query_id = query_id;
    qe.ap = average_precision(scoped, qrels);
    qe.p5 = precision_at_k(scoped, qrels, 5);
    qe.p10 = precision_at_k(scoped, qrels, 10);
    qe.iprec = interpolated_pr(scoped, qrels);
    report.map += qe.ap;
    report.mean_p5 += qe.p5;
    report.mean_p10 += qe.p10;
    for (size_t l = 0; l < 11; ++l) report.mean_iprec[l] += qe.iprec[l];
    report.per_query.push_back(std::move(qe));
    ++evaluated;
  }
  if (evaluated > 0) {
    const double n = static_cast<double>(evaluated);
    report.map /= n;
    report.mean_p5 /= n;
    report.mean_p10 /= n;
    for (auto& v : report.mean_iprec) v /= n;
  }
  return report;
}

RunFile read_run(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open run file: " + path);
  RunFile rf;
  std::map<std::string, size_t> list_of;
  std::set<std::string> bad_ranks;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_ws(line);
    if (fields.size() != 6)
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": malformed run line, expected 6 fields");
    const std::string& query_id = fields[0];
    const std::string& doc_id = fields[2];
    long rank;
    double score;
    try {
      rank = std::stol(fields[3]);
      score = std::stod(fields[4]);
    } catch (const std::exception&) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": bad rank or score field");
    }
    if (rf.run_tag.empty()) rf.run_tag = fields[5];
    auto [it, inserted] = list_of.try_emplace(query_id, rf.lists.size());
    if (inserted) rf.lists.push_back(RankedList{query_id, {}});
    auto& hits = rf.lists[it->second].hits;
    if (rank != static_cast<long>(hits.size()) + 1) bad_ranks.insert(query_id);
    hits.push_back(Hit{doc_id, score});
  }
  for (auto& list : rf.lists) {
    const auto by_score = [](const Hit& a, const Hit& b) {
      if (a.score != b.score) return a.score > b.score;
      return a.doc_id < b.doc_id;
    };
    if (!std::is_sorted(list.hits.begin(), list.hits.end(), by_score))
      bad_ranks.insert(list.query_id);
    if (bad_ranks.count(list.query_id)) {
      rf.warnings.push_back("query '" + list.query_id +
                            "' ranks disagree with scores, re-ranked");
      std::stable_sort(list.hits.begin(), list.hits.end(), by_score);
    }
  }
  return rf;
}

void write_run(const std::vector<RankedList>& lists, const std::string& run_tag,
               const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write run file: " + path);
  for (const auto& list : lists) {
    for (size_t r = 0; r < list.hits.size(); ++r) {
      out << list.query_id << " Q0 " << list.hits[r].doc_id << ' ' << (r + 1) << ' '
          << fmt6(list.hits[r].score) << ' ' << run_tag << '\n';
    }
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

Qrels read_qrels(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open qrels file: " + path);
  Qrels qrels;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_ws(line);
    if (fields.size() != 4)
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": malformed qrels line, expected 4 fields");
    int grade;
    try {
      grade = std::stoi(fields[3]);
    } catch (const std::exception&) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": bad grade field");
    }
    try {
      qrels.add(fields[0], fields[2], grade);
    } catch (const std::runtime_error& e) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return qrels;
}

std::string format_report_structured(const EvalReport& report) {
  std::string out;
  for (const auto& qe : report.per_query) {
    out += "ap\t" + qe.query_id + "\t" + fmt4(qe.ap) + "\n";
    out += "P5\t" + qe.query_id + "\t" + fmt4(qe.p5) + "\n";
    out += "P10\t" + qe.query_id + "\t" + fmt4(qe.p10) + "\n";
    for (size_t l = 0; l < 11; ++l) {
      char name[40];
      std::snprintf(name, sizeof(name), "iprec_at_recall_%.2f", static_cast<double>(l) / 10.0);
      out += std::string(name) + "\t" + qe.query_id + "\t" + fmt4(qe.iprec[l]) + "\n";
    }
  }
  out += "map\tall\t" + fmt4(report.map) + "\n";
  out += "P5\tall\t" + fmt4(report.mean_p5) + "\n";
  out += "P10\tall\t" + fmt4(report.mean_p10) + "\n";
  for (size_t l = 0; l < 11; ++l) {
    char name[40];
    std::snprintf(name, sizeof(name), "iprec_at_recall_%.2f", static_cast<double>(l) / 10.0);
    out += std::string(name) + "\tall\t" + fmt4(report.mean_iprec[l]) + "\n";
  }
  return out;
}

std::string format_report_aligned(const EvalReport& report) {
  char buf[128];
  std::string out;
  std::snprintf(buf, sizeof(buf), "%-22s %-10s %s\n", "metric", "query", "value");
  out += buf;
  for (const auto& qe : report.per_query) {
    std::snprintf(buf, sizeof(buf), "%-22s %-10s %s\n", "ap", qe.query_id.c_str(),
                  fmt4(qe.ap).c_str());
    out += buf;
  }
  std::snprintf(buf, sizeof(buf), "%-22s %-10s %s\n", "map", "all", fmt4(report.map).c_str());
  out += buf;
  std::snprintf(buf, sizeof(buf), "%-22s %-10s %s\n", "P5", "all", fmt4(report.mean_p5).c_str());
  out += buf;
  std::snprintf(buf, sizeof(buf), "%-22s %-10s %s\n", "P10", "all", fmt4(report.mean_p10).c_str());
  out += buf;
  for (size_t l = 0; l < 11; ++l) {
    char name[40];
    std::snprintf(name, sizeof(name), "iprec_at_recall_%.2f", static_cast<double>(l) / 10.0);
    std::snprintf(buf, sizeof(buf), "%-22s %-10s %s\n", name, "all",
                  fmt4(report.mean_iprec[l]).c_str());
    out += buf;
  }
  return out;
}

}  // namespace mesc
