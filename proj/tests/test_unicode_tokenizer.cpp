#include "doctest.h"

#include "mesc/tokenizer.hpp"
#include "mesc/unicode.hpp"

using namespace mesc;

TEST_CASE("utf8 round trip") {
  const std::string s = "jhâni جهان abc";
  CHECK(utf8_encode(utf8_decode(s)) == s);
}

TEST_CASE("utf8 decode counts code points not bytes") {
  CHECK(utf8_decode("jhân").size() == 4);
  CHECK(utf8_decode("جهان").size() == 4);
}

TEST_CASE("invalid utf8 decodes to replacement") {
  const std::string bad = "a\xFFz";
  const auto cps = utf8_decode(bad);
  REQUIRE(cps.size() == 3);
  CHECK(cps[1] == char32_t(0xFFFD));
}

TEST_CASE("nfc composes combining sequences") {
  // a + COMBINING CIRCUMFLEX ACCENT -> U+00E2
  CHECK(nfc("â") == "â");
  // ALEF + MADDA ABOVE -> U+0622
  CHECK(nfc("آ") == "آ");
  CHECK(nfc("plain") == "plain");
}

TEST_CASE("fold_case lowers across scripts, leaves caseless scripts alone") {
  CHECK(fold_case("World") == "world");
  CHECK(fold_case("ÂBC") == "âbc");
  CHECK(fold_case("جهان") == "جهان");
}

TEST_CASE("tokenize splits on whitespace and applies config") {
  TokenizerConfig cfg;
  const auto toks = tokenize("Jam  Jhani\tjam", cfg);
  REQUIRE(toks.size() == 3);
  CHECK(toks[0] == "jam");
  CHECK(toks[1] == "jhani");
  CHECK(toks[2] == "jam");
}

TEST_CASE("tokenize punctuation handling") {
  TokenizerConfig cfg;
  CHECK(tokenize("world, cup!", cfg) == std::vector<std::string>{"world", "cup"});
  cfg.strip_punct = false;
  CHECK(tokenize("world, cup!", cfg) == std::vector<std::string>{"world,", "cup!"});
}

TEST_CASE("tokenize without case folding") {
  TokenizerConfig cfg;
  cfg.case_fold = false;
  CHECK(tokenize("World Cup", cfg) == std::vector<std::string>{"World", "Cup"});
}

TEST_CASE("tokenize normalizes combining forms to composed") {
  TokenizerConfig cfg;
  const auto toks = tokenize("jhân", cfg);
  REQUIRE(toks.size() == 1);
  CHECK(toks[0] == "jhân");
}

TEST_CASE("tokenize on empty and whitespace-only input") {
  TokenizerConfig cfg;
  CHECK(tokenize("", cfg).empty());
  CHECK(tokenize("   \t  ", cfg).empty());
}
