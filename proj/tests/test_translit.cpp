#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "mesc/translit.hpp"

using namespace mesc;
namespace fs = std::filesystem;

namespace {

fs::path write_rules(const std::string& name, const std::string& content) {
  const fs::path p = fs::temp_directory_path() / ("mesc_rules_" + name);
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << content;
  return p;
}

TransliterationTable simple_table() {
  TransliterationTable t;
  t.add_rule("t", false, {"ت"});
  t.add_rule("n", false, {"ن"});
  t.add_rule("a", true, {"â", ""});
  t.add_rule("o", true, {"و", ""});
  return t;
}

}  // namespace

TEST_CASE("rule file parsing") {
  const auto p = write_rules("basic.rules",
                             "# consonants\n"
                             "C t ت\n"
                             "V o و|\n");
  const auto table = TransliterationTable::load(p.string());
  CHECK(table.size() == 2);
  const auto* t = table.find("t");
  REQUIRE(t != nullptr);
  CHECK_FALSE(t->is_vowel);
  REQUIRE(t->alternatives.size() == 1);
  CHECK(t->alternatives[0] == "ت");
  const auto* o = table.find("o");
  REQUIRE(o != nullptr);
  CHECK(o->is_vowel);
  REQUIRE(o->alternatives.size() == 2);
  CHECK(o->alternatives[0] == "و");
  CHECK(o->alternatives[1].empty());
  fs::remove(p);
}

TEST_CASE("duplicate graphemes and bad classes are rejected") {
  const auto dup = write_rules("dup.rules", "C t x\nC t y\n");
  CHECK_THROWS_WITH_AS(TransliterationTable::load(dup.string()),
                       doctest::Contains("duplicate"), std::runtime_error);
  fs::remove(dup);

  const auto cls = write_rules("cls.rules", "X t x\n");
  CHECK_THROWS_WITH_AS(TransliterationTable::load(cls.string()),
                       doctest::Contains("unknown grapheme class"), std::runtime_error);
  fs::remove(cls);

  const auto mal = write_rules("mal.rules", "C\n");
  CHECK_THROWS_AS(TransliterationTable::load(mal.string()), std::runtime_error);
  fs::remove(mal);
}

TEST_CASE("two-way vowel expansion") {
  const auto table = simple_table();
  const auto result = generate_variants("ta", table, 100);
  REQUIRE(result.variants.size() == 2);
  CHECK(result.variants[0] == "تâ");
  CHECK(result.variants[1] == "ت");
  CHECK_FALSE(result.truncated);
  CHECK(result.unknown_graphemes.empty());
}

TEST_CASE("three vowels give eight variants") {
  const auto table = simple_table();
  const auto result = generate_variants("atoa", table, 100);
  CHECK(result.variants.size() == 8);
  CHECK_FALSE(result.truncated);
}

TEST_CASE("cap truncates and flags") {
  const auto table = simple_table();
  const auto result = generate_variants("atoa", table, 4);
  CHECK(result.variants.size() == 4);
  CHECK(result.truncated);
}

TEST_CASE("earlier alternatives come first, leftmost most significant") {
  TransliterationTable t;
  t.add_rule("a", true, {"1", "2"});
  t.add_rule("b", true, {"x", "y"});
  const auto result = generate_variants("ab", t, 100);
  REQUIRE(result.variants.size() == 4);
  CHECK(result.variants[0] == "1x");
  CHECK(result.variants[1] == "1y");
  CHECK(result.variants[2] == "2x");
  CHECK(result.variants[3] == "2y");
}

TEST_CASE("consonant-only terms yield exactly one variant") {
  const auto table = simple_table();
  const auto result = generate_variants("tnt", table, 100);
  REQUIRE(result.variants.size() == 1);
  CHECK(result.variants[0] == "تنت");
}

TEST_CASE("unknown graphemes pass through and are reported") {
  const auto table = simple_table();
  const auto result = generate_variants("tqa", table, 100);
  REQUIRE(result.unknown_graphemes.size() == 1);
  CHECK(result.unknown_graphemes[0] == "q");
  REQUIRE(result.variants.size() == 2);
  CHECK(result.variants[0] == "تqâ");
}

TEST_CASE("digraphs match longest-first") {
  TransliterationTable t;
  t.add_rule("s", false, {"S"});
  t.add_rule("h", false, {"H"});
  t.add_rule("sh", false, {"ش"});
  const auto result = generate_variants("shs", t, 10);
  REQUIRE(result.variants.size() == 1);
  CHECK(result.variants[0] == "شS");
}

TEST_CASE("variant dedup collapses identical expansions") {
  TransliterationTable t;
  t.add_rule("a", true, {"x", "x"});
  const auto result = generate_variants("a", t, 10);
  CHECK(result.variants == std::vector<std::string>{"x"});
}

TEST_CASE("expansion is deterministic") {
  const auto table = simple_table();
  const auto a = generate_variants("atoa", table, 6);
  const auto b = generate_variants("atoa", table, 6);
  CHECK(a.variants == b.variants);
  CHECK(a.truncated == b.truncated);
}

TEST_CASE("transliterate_oov filters to vocabulary") {
  const auto table = simple_table();
  Vocabulary vocab;
  vocab.add("ت");  // the vowel-dropped form only
  const auto support = transliterate_oov("ta", table, vocab, 100);
  REQUIRE(support.candidates.size() == 1);
  CHECK(support.candidates[0] == "ت");
  CHECK_FALSE(support.unverified);
}

TEST_CASE("transliterate_oov falls back to the first variant") {
  const auto table = simple_table();
  Vocabulary vocab;
  vocab.add("unrelated");
  const auto support = transliterate_oov("ta", table, vocab, 100);
  REQUIRE(support.candidates.size() == 1);
  CHECK(support.candidates[0] == "تâ");
  CHECK(support.unverified);
}

TEST_CASE("shipped sample table classifies every Latin letter") {
  const auto table =
      TransliterationTable::load(std::string(MESC_DATA_DIR) + "/translit_en_fa.rules");
  for (char c = 'a'; c <= 'z'; ++c) {
    const std::string letter(1, c);
    const auto* rule = table.find(letter);
    REQUIRE_MESSAGE(rule != nullptr, "letter ", letter, " is unclassified");
    CHECK_FALSE(rule->alternatives.empty());
  }
  // digraphs take precedence over their parts
  const auto segs = table.segment("shah");
  REQUIRE(segs.size() == 3);
  CHECK(segs[0].grapheme == "sh");
}

TEST_CASE("planted transliteration is recovered from distractors") {
  TransliterationTable t;
  t.add_rule("m", false, {"m"});
  t.add_rule("r", false, {"r"});
  t.add_rule("k", false, {"k"});
  t.add_rule("a", true, {"â", "a", ""});
  t.add_rule("e", true, {"i", ""});
  Vocabulary vocab;
  vocab.add("mrkâ");  // planted correct form
  vocab.add("zzz1");
  vocab.add("zzz2");
  const auto support = transliterate_oov("merka", t, vocab, 256);
  REQUIRE(support.candidates.size() == 1);
  CHECK(support.candidates[0] == "mrkâ");
  CHECK_FALSE(support.unverified);
}
