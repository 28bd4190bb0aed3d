#include "blinker/tokenizer.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "blinker/errors.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace blinker {
namespace {

using testing::default_table;

std::vector<std::string> surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(t.surface);
  return out;
}

std::vector<std::string> tok(std::string_view raw, std::string_view lang) {
  return surfaces(tokenize(raw, lang, default_table()));
}

using Words = std::vector<std::string>;

TEST(TokenizeTest, ContractionExpandsWithSharedSpan) {
  const auto tokens = tokenize("du", "fr", default_table());
  ASSERT_EQ(tokens.size(), 2u);
  EXPECT_EQ(tokens[0].surface, "de");
  EXPECT_EQ(tokens[1].surface, "le");
  for (const auto& t : tokens) {
    EXPECT_EQ(t.kind, TokenKind::kExpanded);
    EXPECT_EQ(t.span, (Span{0, 2}));
  }
}

TEST(TokenizeTest, PossessiveCliticSplits) {
  EXPECT_EQ(tok("Lord's wages", "en"), (Words{"Lord", "'s", "wages"}));
}

TEST(TokenizeTest, EmptyInput) {
  EXPECT_TRUE(tokenize("", "en", default_table()).empty());
  EXPECT_TRUE(tokenize("  \t ", "fr", default_table()).empty());
}

TEST(TokenizeTest, PluralPossessiveApostrophe) {
  EXPECT_EQ(tok("brothers' keeper .", "en"),
            (Words{"brothers", "'", "keeper", "."}));
}

TEST(TokenizeTest, CapitalPropagatesToFirstReplacement) {
  EXPECT_EQ(tok("Du pain", "fr"), (Words{"De", "le", "pain"}));
  EXPECT_EQ(tok("Aux portes", "fr"), (Words{"À", "les", "portes"}));
}

TEST(TokenizeTest, FrenchContractions) {
  EXPECT_EQ(tok("des vignes au champ aux bergers", "fr"),
            (Words{"de", "les", "vignes", "à", "le", "champ", "à", "les",
                   "bergers"}));
}

TEST(TokenizeTest, PrefixElisionsSplitAndKeepSurface) {
  EXPECT_EQ(tok("l'homme qu'il n'est jusqu'à", "fr"),
            (Words{"l'", "homme", "qu'", "il", "n'", "est", "jusqu'", "à"}));
  EXPECT_EQ(tok("L’Éternel", "fr"), (Words{"L’", "Éternel"}));
  // Not an elision in the table: stays one word.
  EXPECT_EQ(tok("aujourd'hui", "fr"), (Words{"aujourd'hui"}));
}

TEST(TokenizeTest, HyphenSplitDropsHyphen) {
  const auto tokens = tokenize("peut-être", "fr", default_table());
  ASSERT_EQ(surfaces(tokens), (Words{"peut", "être"}));
  EXPECT_EQ(tokens[0].span, (Span{0, 4}));
  EXPECT_EQ(tokens[1].span, (Span{5, 10}));
  EXPECT_EQ(tok("va-t-il", "fr"), (Words{"va", "t", "il"}));
}

TEST(TokenizeTest, EdgeHyphensArePunctuation) {
  EXPECT_EQ(tok("-- word -", "en"), (Words{"-", "-", "word", "-"}));
}

TEST(TokenizeTest, PunctuationDetached) {
  const auto tokens = tokenize("(thee), «aime» ;", "fr", default_table());
  EXPECT_EQ(surfaces(tokens),
            (Words{"(", "thee", ")", ",", "«", "aime", "»", ";"}));
  EXPECT_EQ(tokens[0].kind, TokenKind::kPunctuation);
  EXPECT_EQ(tokens[1].kind, TokenKind::kWord);
}

TEST(TokenizeTest, NegativeContractionKeptAttached) {
  EXPECT_EQ(tok("don't", "en"), (Words{"don't"}));
}

TEST(TokenizeTest, QuotesAroundWords) {
  EXPECT_EQ(tok("'quoted'", "fr"), (Words{"'", "quoted", "'"}));
}

TEST(TokenizeTest, ElisionRulesAreLanguageSpecific) {
  EXPECT_EQ(tok("du", "en"), (Words{"du"}));
  EXPECT_EQ(tok("Lord's", "fr"), (Words{"Lord's"}));
}

TEST(TokenizeTest, NoBreakSpaceSeparates) {
  EXPECT_EQ(tok("salaire\xE2\x80\xAF;", "fr"), (Words{"salaire", ";"}));
}

TEST(TokenizeTest, SideIsRecorded) {
  for (const auto& t : tokenize("a b", "en", default_table(), Side::kTarget)) {
    EXPECT_EQ(t.side, Side::kTarget);
  }
}

TEST(TokenizeTest, CustomPunctuationSet) {
  PunctuationSet none;
  EXPECT_EQ(surfaces(tokenize("a,b", "en", default_table(), Side::kSource,
                              none)),
            (Words{"a,b"}));
}

TEST(ElisionTableTest, RejectsEmptyReplacement) {
  ElisionTable table;
  EXPECT_THROW(table.add("fr", "du", {}), ValidationError);
  EXPECT_THROW(table.add("fr", "", {"x"}), ValidationError);
}

TEST(ElisionTableTest, LoadsUserEntries) {
  ElisionTable table = ElisionTable::defaults();
  std::istringstream in("# extra\nfr\tdel\tde el\n");
  table.load(in);
  EXPECT_EQ(surfaces(tokenize("del", "fr", table)), (Words{"de", "el"}));
  std::istringstream bad("fr\tdel\n");
  EXPECT_THROW(table.load(bad), ParseError);
}

TEST(ElisionTableTest, ReverseLookup) {
  const auto& table = default_table();
  EXPECT_TRUE(table.expands_to("fr", "Du", {"De", "le"}));
  EXPECT_TRUE(table.expands_to("fr", "du", {"de", "le"}));
  EXPECT_FALSE(table.expands_to("fr", "du", {"de", "la"}));
}

// Reconstruction, idempotence and determinism over random verses.
TEST(TokenizePropertyTest, RandomVersesReconstructAndAreIdempotent) {
  std::mt19937_64 rng(20261018);
  for (int n = 0; n < 500; ++n) {
    const std::string lang = n % 2 ? "fr" : "en";
    const std::string raw = testing::random_verse(rng, lang);
    const auto tokens = tokenize(raw, lang, default_table());
    EXPECT_EQ(testing::reconstruction_error(raw, lang, tokens,
                                            default_table()),
              "")
        << raw;
    std::string joined;
    for (const auto& t : tokens) {
      if (!joined.empty()) joined += ' ';
      joined += t.surface;
    }
    EXPECT_EQ(tok(joined, lang), surfaces(tokens)) << raw;
    EXPECT_EQ(tokenize(raw, lang, default_table()), tokens);
  }
}

}  // namespace
}  // namespace blinker
