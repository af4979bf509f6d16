#include "doctest.h"
#include "mesc/baselines.hpp"
#include "mesc/mesc_model.hpp"
#include "synthetic.hpp"

using namespace mesc;

namespace {

BilingualDictionary paper_style_dict() {
  BilingualDictionary dict;
  dict.add_entry("world", {Candidate{{"jhân"}}, Candidate{{"giti"}},
                           Candidate{{"dniâ"}}, Candidate{{"âlm"}}});
  dict.add_entry("cup",
                 {Candidate{{"fnjân"}}, Candidate{{"jâm"}}, Candidate{{"piâlh"}}});
  dict.add_entry("iran", {Candidate{{"irân"}}});
  return dict;
}

}  // namespace

TEST_CASE("top-1 emits the rank-1 candidate") {
  const auto dict = paper_style_dict();
  Vocabulary vocab;
  const auto out = top_n_translate({"world"}, dict, 1, nullptr, vocab, MescParams{});
  CHECK(out == std::vector<std::string>{"jhân"});
}

TEST_CASE("top-n clamps to the candidate list length") {
  const auto dict = paper_style_dict();
  Vocabulary vocab;
  const auto out = top_n_translate({"cup"}, dict, 10, nullptr, vocab, MescParams{});
  CHECK(out == std::vector<std::string>{"fnjân", "jâm", "piâlh"});
}

TEST_CASE("top-n output is a prefix of top-(n+1) per term") {
  const auto dict = paper_style_dict();
  Vocabulary vocab;
  std::vector<std::string> previous;
  for (size_t n = 1; n <= 5; ++n) {
    const auto out = top_n_translate({"world"}, dict, n, nullptr, vocab, MescParams{});
    CHECK(out.size() == std::min<size_t>(n, 4));
    if (!previous.empty()) {
      REQUIRE(out.size() >= previous.size());
      for (size_t i = 0; i < previous.size(); ++i) CHECK(out[i] == previous[i]);
    }
    previous = out;
  }
}

TEST_CASE("top-1 equals MESC's zero-mass fallback for in-dictionary terms") {
  const auto dict = paper_style_dict();
  const auto coll = make_collection({{"d1", {"noise"}}});
  const auto idx = CooccurrenceIndex::build(coll, 1);  // no pair mass at all
  const std::vector<std::string> query = {"world", "cup", "iran"};
  const auto top1 = top_n_translate(query, dict, 1, nullptr, idx.vocab(), MescParams{});
  const auto mesc_result = translate_query("q", query, dict, idx, nullptr, MescParams{});
  REQUIRE(mesc_result.terms.size() == top1.size());
  for (size_t i = 0; i < top1.size(); ++i) {
    REQUIRE(mesc_result.terms[i].chosen_tokens.size() == 1);
    CHECK(mesc_result.terms[i].chosen_tokens[0] == top1[i]);
  }
}

TEST_CASE("top-n routes OOV terms through the transliteration fallback") {
  const auto dict = paper_style_dict();
  TransliterationTable table;
  table.add_rule("z", false, {"Z"});
  table.add_rule("o", true, {"O", ""});
  Vocabulary vocab;
  vocab.add("ZO");
  const auto out = top_n_translate({"zo"}, dict, 1, &table, vocab, MescParams{});
  CHECK(out == std::vector<std::string>{"ZO"});
}

TEST_CASE("multi-token candidates are flattened into the bag") {
  BilingualDictionary dict;
  dict.add_entry("worldcup", {Candidate{{"jâm", "jhâni"}}});
  Vocabulary vocab;
  const auto out = top_n_translate({"worldcup"}, dict, 1, nullptr, vocab, MescParams{});
  CHECK(out == std::vector<std::string>{"jâm", "jhâni"});
}

TEST_CASE("pirkola groups hold every candidate") {
  const auto dict = paper_style_dict();
  Vocabulary vocab;
  const auto sq =
      pirkola_structured("q1", {"world", "cup"}, dict, nullptr, vocab, MescParams{});
  REQUIRE(sq.groups.size() == 2);
  CHECK(sq.groups[0].source == "world");
  REQUIRE(sq.groups[0].members.size() == 4);
  CHECK(sq.groups[0].members[0].joined() == "jhân");
  CHECK(sq.groups[0].members[3].joined() == "âlm");
  REQUIRE(sq.groups[1].members.size() == 3);
}

TEST_CASE("single-candidate terms become singleton groups") {
  const auto dict = paper_style_dict();
  Vocabulary vocab;
  const auto sq = pirkola_structured("q", {"iran"}, dict, nullptr, vocab, MescParams{});
  REQUIRE(sq.groups.size() == 1);
  CHECK(sq.groups[0].members.size() == 1);
}

TEST_CASE("pirkola OOV groups come from transliteration variants") {
  const auto dict = paper_style_dict();
  TransliterationTable table;
  table.add_rule("z", false, {"Z"});
  table.add_rule("o", true, {"O", ""});
  Vocabulary vocab;
  vocab.add("ZO");
  vocab.add("Z");
  const auto sq = pirkola_structured("q", {"zo"}, dict, &table, vocab, MescParams{});
  REQUIRE(sq.groups.size() == 1);
  REQUIRE(sq.groups[0].members.size() == 2);
  CHECK(sq.groups[0].members[0].joined() == "ZO");
  CHECK(sq.groups[0].members[1].joined() == "Z");
}

TEST_CASE("pirkola groups align one to one with translatable terms") {
  const auto dict = paper_style_dict();
  Vocabulary vocab;
  MescParams params;
  params.stopwords = {"the"};
  const auto sq =
      pirkola_structured("q", {"the", "world", "iran"}, dict, nullptr, vocab, params);
  REQUIRE(sq.groups.size() == 2);
  CHECK(sq.groups[0].source == "world");
  CHECK(sq.groups[1].source == "iran");
  for (const auto& g : sq.groups) CHECK_FALSE(g.members.empty());
}

TEST_CASE("top_n rejects n = 0") {
  const auto dict = paper_style_dict();
  Vocabulary vocab;
  CHECK_THROWS_AS(top_n_translate({"world"}, dict, 0, nullptr, vocab, MescParams{}),
                  std::invalid_argument);
}
