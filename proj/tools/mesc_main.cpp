// mesc: dictionary-based cross-lingual query translation and retrieval.
//
// Subcommands wire the library into the experimental pipeline:
//   index      build and persist the co-occurrence/retrieval index
//   translate  translate topics (mesc | top-n | pirkola)
//   retrieve   run BM25 over translated or structured queries
//   evaluate   score a TREC run against qrels
//   stats      dictionary scale statistics

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <unordered_set>

#include "CLI11.hpp"
#include "mesc/baselines.hpp"
#include "mesc/config.hpp"
#include "mesc/cooccurrence.hpp"
#include "mesc/corpus.hpp"
#include "mesc/eval.hpp"
#include "mesc/lexicon.hpp"
#include "mesc/mesc_model.hpp"
#include "mesc/query_io.hpp"
#include "mesc/retrieval.hpp"
#include "mesc/translit.hpp"

namespace {

std::string env_name(std::string name) {
  for (auto& c : name) c = (c == '-') ? '_' : static_cast<char>(std::toupper(c));
  return "MESC_" + name;
}

CLI::Option* opt_env(CLI::Option* opt, const std::string& name) {
  return opt->envname(env_name(name));
}

std::unordered_set<std::string> load_stopwords(const std::string& path,
                                               const mesc::TokenizerConfig& cfg) {
  std::unordered_set<std::string> words;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open stopword file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    words.insert(mesc::normalize_term(line, cfg));
  }
  return words;
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

// Config files supply parameter defaults; anything given on the command line
// (or through MESC_* environment variables) wins.
struct ConfigApplier {
  const CLI::App& cmd;
  mesc::KeyValueConfig cfg;

  bool flag_set(const char* name) const { return cmd.count(name) > 0; }

  void boolean(const char* flag, const char* key, bool& target) const {
    if (flag_set(flag)) return;
    if (const auto v = cfg.get_bool(key)) target = *v;
  }
  template <typename T>
  void unsigned_number(const char* flag, const char* key, T& target) const {
    if (flag_set(flag)) return;
    if (const auto v = cfg.get_uint(key)) target = static_cast<T>(*v);
  }
  void real(const char* flag, const char* key, double& target) const {
    if (flag_set(flag)) return;
    if (const auto v = cfg.get_double(key)) target = *v;
  }
  void text(const char* flag, const char* key, std::string& target) const {
    if (flag_set(flag)) return;
    if (const auto v = cfg.get(key)) target = *v;
  }
};

struct IndexArgs {
  std::string corpus;
  std::string out;
  std::string config;
  uint32_t window = 8;
  bool case_fold = true;
  bool strip_punct = true;
};

int run_index(const IndexArgs& args) {
  mesc::TokenizerConfig cfg{args.case_fold, args.strip_punct};
  std::vector<std::string> warnings;
  const auto collection = mesc::ingest_corpus(args.corpus, cfg, &warnings);
  print_warnings(warnings);
  const auto index = mesc::CooccurrenceIndex::build(collection, args.window);
  index.save(args.out);
  std::cout << "vocabulary\t" << index.vocab().size() << "\n"
            << "documents\t" << index.doc_count() << "\n"
            << "pairs\t" << index.pairs().size() << "\n"
            << "pair_mass\t" << index.total_pair_mass() << "\n";
  return 0;
}

struct TranslateArgs {
  std::string method;
  std::string config;
  std::string index;
  std::string dict;
  std::string topics;
  std::string out;
  std::string translit;
  std::string diagnostics;
  std::string stopwords;
  size_t n = 1;
  size_t min_stem_len = 3;
  size_t translit_cap = 256;
  bool case_fold = true;
  bool strip_punct = true;
};

int run_translate(const TranslateArgs& args) {
  const mesc::TokenizerConfig cfg{args.case_fold, args.strip_punct};
  const auto index = mesc::CooccurrenceIndex::load(args.index);
  const auto dict = mesc::BilingualDictionary::load(args.dict, cfg);
  print_warnings(dict.warnings());
  const auto topics = mesc::read_topics(args.topics);

  std::optional<mesc::TransliterationTable> table;
  if (!args.translit.empty()) table = mesc::TransliterationTable::load(args.translit);
  const mesc::TransliterationTable* table_ptr = table ? &*table : nullptr;

  mesc::MescParams params;
  params.min_support_stem_len = args.min_stem_len;
  params.translit_cap = args.translit_cap;
  if (!args.stopwords.empty()) params.stopwords = load_stopwords(args.stopwords, cfg);

  if (args.method == "pirkola") {
    std::vector<mesc::StructuredQuery> queries;
    for (const auto& topic : topics)
      queries.push_back(mesc::pirkola_structured(topic.query_id, mesc::tokenize(topic.text, cfg),
                                                 dict, table_ptr, index.vocab(), params));
    mesc::write_structured(queries, args.out);
    return 0;
  }

  std::vector<mesc::TranslatedQuery> rows;
  std::ofstream diag_out;
  if (!args.diagnostics.empty()) {
    diag_out.open(args.diagnostics, std::ios::binary | std::ios::trunc);
    if (!diag_out)
      throw std::runtime_error("cannot write diagnostics file: " + args.diagnostics);
  }

  if (args.method == "top-n") {
    for (const auto& topic : topics) {
      const auto terms = mesc::top_n_translate(mesc::tokenize(topic.text, cfg), dict, args.n,
                                               table_ptr, index.vocab(), params);
      rows.push_back(mesc::TranslatedQuery{topic.query_id, terms});
    }
  } else {  // mesc
    const mesc::NeighborFinder finder(index.vocab().terms(), params.min_support_stem_len);
    for (const auto& topic : topics) {
      const auto result = mesc::translate_query(topic.query_id, mesc::tokenize(topic.text, cfg),
                                                dict, index, table_ptr, params, &finder);
      mesc::TranslatedQuery row;
      row.query_id = topic.query_id;
      for (const auto& term : result.terms) {
        for (const auto& tok : term.chosen_tokens) row.terms.push_back(tok);
        if (term.source_list == mesc::ChoiceSource::kUntranslated)
          std::cerr << "warning: query " << topic.query_id << ": term '" << term.source
                    << "' has no candidates, passed through\n";
        else if (term.unverified)
          std::cerr << "warning: query " << topic.query_id << ": term '" << term.source
                    << "' transliterated to an out-of-vocabulary form\n";
      }
      rows.push_back(std::move(row));
      if (diag_out) diag_out << mesc::format_diagnostics(result);
    }
  }
  mesc::write_translations(rows, args.out);
  return 0;
}

struct RetrieveArgs {
  std::string index;
  std::string queries;
  std::string out;
  std::string config;
  std::string run_tag = "mesc";
  size_t k = 1000;
  double k1 = 1.2;
  double b = 0.75;
  bool prf = false;
  size_t fb_docs = 10;
  size_t fb_terms = 20;
  double fb_alpha = 0.5;
};

int run_retrieve(const RetrieveArgs& args) {
  const auto index = mesc::CooccurrenceIndex::load(args.index);
  const mesc::Bm25Params bm25{args.k1, args.b};
  const mesc::PrfParams prf{args.fb_docs, args.fb_terms, args.fb_alpha};

  std::ifstream in(args.queries, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open queries file: " + args.queries);
  std::vector<mesc::RankedList> lists;
  std::vector<std::string> warnings;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0)
      throw std::runtime_error(args.queries + ":" + std::to_string(line_no) +
                               ": malformed query line");
    const std::string query_id = line.substr(0, tab);
    const std::string body = line.substr(tab + 1);

    if (mesc::looks_structured(body)) {
      const auto sq = mesc::parse_structured(query_id, body);
      if (args.prf)
        warnings.push_back("query '" + query_id +
                           "' is structured; feedback expansion skipped");
      lists.push_back(mesc::retrieve(index, sq, args.k, bm25, &warnings));
    } else {
      std::vector<std::string> terms;
      size_t start = 0;
      for (size_t i = 0; i <= body.size(); ++i) {
        if (i == body.size() || body[i] == ' ') {
          if (i > start) terms.push_back(body.substr(start, i - start));
          start = i + 1;
        }
      }
      auto bag = mesc::make_bag_query(terms);
      if (args.prf) {
        const auto initial = mesc::retrieve(index, query_id, bag, args.k, bm25, &warnings);
        bag = mesc::prf_expand(index, bag, initial, prf);
      }
      lists.push_back(mesc::retrieve(index, query_id, bag, args.k, bm25, &warnings));
    }
  }
  print_warnings(warnings);
  mesc::write_run(lists, args.run_tag, args.out);
  return 0;
}

struct EvaluateArgs {
  std::string run;
  std::string qrels;
  std::string out;
};

int run_evaluate(const EvaluateArgs& args) {
  const auto run_file = mesc::read_run(args.run);
  print_warnings(run_file.warnings);
  const auto qrels = mesc::read_qrels(args.qrels);
  const auto report = mesc::evaluate_run(run_file.lists, qrels);
  print_warnings(report.warnings);
  std::cout << mesc::format_report_aligned(report);
  if (!args.out.empty()) {
    std::ofstream out(args.out, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write report file: " + args.out);
    out << mesc::format_report_structured(report);
  }
  return 0;
}

int run_stats(const std::string& dict_path) {
  const auto dict = mesc::BilingualDictionary::load(dict_path, mesc::TokenizerConfig{});
  print_warnings(dict.warnings());
  const auto stats = dict.stats();
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", stats.scale);
  std::cout << "entries\t" << dict.entry_count() << "\n"
            << "scale\t" << buf << "\n";
  std::snprintf(buf, sizeof(buf), "%.4f", stats.variance);
  std::cout << "variance\t" << buf << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dictionary-based cross-lingual query translation and retrieval"};
  app.require_subcommand(1);

  IndexArgs index_args;
  auto* cmd_index = app.add_subcommand("index", "build and persist the corpus index");
  opt_env(cmd_index->add_option("--corpus", index_args.corpus, "corpus file (doc_id<TAB>text)")
              ->required(), "corpus");
  opt_env(cmd_index->add_option("--config", index_args.config, "key = value config file"),
          "config");
  opt_env(cmd_index->add_option("--out", index_args.out, "output index file")->required(),
          "out");
  opt_env(cmd_index->add_option("--window,--window_size", index_args.window,
                                "co-occurrence window (>= 1)")
              ->check(CLI::PositiveNumber), "window");
  opt_env(cmd_index->add_flag("--case-fold,--case_fold,!--no-case-fold", index_args.case_fold,
                              "lowercase tokens"), "case-fold");
  opt_env(cmd_index->add_flag("--strip-punct,--strip_punct,!--no-strip-punct",
                              index_args.strip_punct, "map punctuation to spaces"),
          "strip-punct");

  TranslateArgs tr_args;
  auto* cmd_translate = app.add_subcommand("translate", "translate topics into target queries");
  opt_env(cmd_translate->add_option("--method", tr_args.method, "mesc | top-n | pirkola")
              ->check(CLI::IsMember({"mesc", "top-n", "pirkola"})), "method");
  opt_env(cmd_translate->add_option("--config", tr_args.config, "key = value config file"),
          "config");
  opt_env(cmd_translate->add_option("--index", tr_args.index, "index file")->required(),
          "index");
  opt_env(cmd_translate->add_option("--dict", tr_args.dict, "bilingual dictionary")->required(),
          "dict");
  opt_env(cmd_translate->add_option("--topics", tr_args.topics, "topics file")->required(),
          "topics");
  opt_env(cmd_translate->add_option("--out", tr_args.out, "output file")->required(), "out");
  opt_env(cmd_translate->add_option("--translit", tr_args.translit,
                                    "transliteration rules for OOV terms"), "translit");
  opt_env(cmd_translate->add_option("--diagnostics", tr_args.diagnostics,
                                    "per-candidate probability dump (mesc)"), "diagnostics");
  opt_env(cmd_translate->add_option("--stopwords", tr_args.stopwords, "stopword list"),
          "stopwords");
  opt_env(cmd_translate->add_option("--n", tr_args.n, "candidates per term for top-n")
              ->check(CLI::PositiveNumber), "n");
  opt_env(cmd_translate->add_option("--min-stem-len,--min_support_stem_len",
                                    tr_args.min_stem_len,
                                    "minimum anchor length for edit neighbors"),
          "min-stem-len");
  opt_env(cmd_translate->add_option("--translit-cap,--translit_cap", tr_args.translit_cap,
                                    "variant cap per OOV term")
              ->check(CLI::PositiveNumber), "translit-cap");
  opt_env(cmd_translate->add_flag("--case-fold,--case_fold,!--no-case-fold", tr_args.case_fold,
                                  "lowercase source text"), "case-fold");
  opt_env(cmd_translate->add_flag("--strip-punct,--strip_punct,!--no-strip-punct",
                                  tr_args.strip_punct, "map punctuation to spaces"),
          "strip-punct");

  RetrieveArgs rt_args;
  auto* cmd_retrieve = app.add_subcommand("retrieve", "BM25 retrieval to a TREC run file");
  opt_env(cmd_retrieve->add_option("--index", rt_args.index, "index file")->required(),
          "index");
  opt_env(cmd_retrieve->add_option("--config", rt_args.config, "key = value config file"),
          "config");
  opt_env(cmd_retrieve->add_option("--queries", rt_args.queries,
                                   "translated or structured query file")
              ->required(), "queries");
  opt_env(cmd_retrieve->add_option("--out", rt_args.out, "run file")->required(), "out");
  opt_env(cmd_retrieve->add_option("--run-tag,--run_tag", rt_args.run_tag, "run tag column"),
          "run-tag");
  opt_env(cmd_retrieve->add_option("--k", rt_args.k, "retrieval depth")
              ->check(CLI::PositiveNumber), "k");
  opt_env(cmd_retrieve->add_option("--k1", rt_args.k1, "BM25 k1"), "k1");
  opt_env(cmd_retrieve->add_option("--b", rt_args.b, "BM25 b"), "b");
  opt_env(cmd_retrieve->add_flag("--prf", rt_args.prf, "pseudo-relevance feedback"), "prf");
  opt_env(cmd_retrieve->add_option("--fb-docs,--fb_docs", rt_args.fb_docs, "feedback docs"),
          "fb-docs");
  opt_env(cmd_retrieve->add_option("--fb-terms,--fb_terms", rt_args.fb_terms, "feedback terms"),
          "fb-terms");
  opt_env(cmd_retrieve->add_option("--fb-alpha,--fb_alpha", rt_args.fb_alpha,
                                   "feedback term weight"), "fb-alpha");

  EvaluateArgs ev_args;
  auto* cmd_evaluate = app.add_subcommand("evaluate", "score a run against qrels");
  opt_env(cmd_evaluate->add_option("--run", ev_args.run, "TREC run file")->required(), "run");
  opt_env(cmd_evaluate->add_option("--qrels", ev_args.qrels, "qrels file")->required(),
          "qrels");
  opt_env(cmd_evaluate->add_option("--out", ev_args.out, "structured report file"), "out");

  std::string stats_dict;
  auto* cmd_stats = app.add_subcommand("stats", "dictionary scale statistics");
  opt_env(cmd_stats->add_option("--dict", stats_dict, "bilingual dictionary")->required(),
          "dict");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage errors
  }

  try {
    if (cmd_index->parsed()) {
      if (!index_args.config.empty()) {
        const ConfigApplier a{*cmd_index, mesc::KeyValueConfig::load(index_args.config)};
        a.unsigned_number("--window", "window", index_args.window);
        a.boolean("--case-fold", "case_fold", index_args.case_fold);
        a.boolean("--strip-punct", "strip_punct", index_args.strip_punct);
      }
      return run_index(index_args);
    }
    if (cmd_translate->parsed()) {
      if (!tr_args.config.empty()) {
        const ConfigApplier a{*cmd_translate, mesc::KeyValueConfig::load(tr_args.config)};
        a.text("--method", "method", tr_args.method);
        a.unsigned_number("--n", "n", tr_args.n);
        a.unsigned_number("--min-stem-len", "min_stem_len", tr_args.min_stem_len);
        a.unsigned_number("--min-stem-len", "min_support_stem_len", tr_args.min_stem_len);
        a.unsigned_number("--translit-cap", "translit_cap", tr_args.translit_cap);
        a.boolean("--case-fold", "case_fold", tr_args.case_fold);
        a.boolean("--strip-punct", "strip_punct", tr_args.strip_punct);
      }
      if (tr_args.method != "mesc" && tr_args.method != "top-n" && tr_args.method != "pirkola") {
        std::cerr << (tr_args.method.empty()
                          ? "error: --method is required (mesc | top-n | pirkola)"
                          : "error: unknown method '" + tr_args.method + "'")
                  << "\n";
        return 2;
      }
      return run_translate(tr_args);
    }
    if (cmd_retrieve->parsed()) {
      if (!rt_args.config.empty()) {
        const ConfigApplier a{*cmd_retrieve, mesc::KeyValueConfig::load(rt_args.config)};
        a.unsigned_number("--k", "k", rt_args.k);
        a.real("--k1", "k1", rt_args.k1);
        a.real("--b", "b", rt_args.b);
        a.boolean("--prf", "prf", rt_args.prf);
        a.unsigned_number("--fb-docs", "fb_docs", rt_args.fb_docs);
        a.unsigned_number("--fb-terms", "fb_terms", rt_args.fb_terms);
        a.real("--fb-alpha", "fb_alpha", rt_args.fb_alpha);
        a.text("--run-tag", "run_tag", rt_args.run_tag);
      }
      return run_retrieve(rt_args);
    }
    if (cmd_evaluate->parsed()) return run_evaluate(ev_args);
    if (cmd_stats->parsed()) return run_stats(stats_dict);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
