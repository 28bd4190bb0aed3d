#include "blinker/punctuation.hpp"

#include <gtest/gtest.h>

#include <random>

#include "blinker/errors.hpp"
#include "blinker/lexicons.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace blinker {
namespace {

const SurfaceSet& punct() {
  static const SurfaceSet set = Lexicons::defaults().punctuation;
  return set;
}

VersePair verse(const std::string& source, const std::string& target) {
  return make_verse_pair("p", "en", "fr", source, target,
                         testing::default_table());
}

TEST(PunctuationClassTest, Classes) {
  EXPECT_EQ(punctuation_class(","), punctuation_class(";"));
  EXPECT_EQ(punctuation_class("."), punctuation_class(":"));
  EXPECT_EQ(punctuation_class("«"), punctuation_class("\""));
  EXPECT_NE(punctuation_class("("), punctuation_class(")"));
  EXPECT_NE(punctuation_class(","), punctuation_class("("));
}

TEST(OptimalPunctLinksTest, SingleCommaEachSide) {
  const VersePair vp = verse("a ,", "b ,");
  const Alignment a = empty_alignment(vp, "ann");
  EXPECT_EQ(optimal_punct_links(vp, a, punct()), (LinkSet{{1, 1}}));
}

TEST(OptimalPunctLinksTest, TwoCommasAgainstOne) {
  //  en: 0 a 1 , 2 b 3 , 4 c      fr: 0 x 1 y 2 , 3 z
  const VersePair vp = verse("a , b , c", "x y , z");
  Alignment a = empty_alignment(vp, "ann");
  a.links = {{0, 0}, {2, 1}, {4, 3}};
  // Enumerate both candidates by hand: (1,2) crosses (2,1); (3,2) crosses
  // nothing.
  EXPECT_EQ(crossing_count(LinkSet{{0, 0}, {2, 1}, {4, 3}, {1, 2}}), 1u);
  EXPECT_EQ(crossing_count(LinkSet{{0, 0}, {2, 1}, {4, 3}, {3, 2}}), 0u);
  EXPECT_EQ(optimal_punct_links(vp, a, punct()), (LinkSet{{3, 2}}));
}

TEST(OptimalPunctLinksTest, ThreeByThreeScrambled) {
  const VersePair vp = verse("a , b , c , d", "w , x , y , z");
  Alignment a = empty_alignment(vp, "ann");
  a.links = {{0, 4}, {2, 0}, {4, 6}, {6, 2}};
  const auto split = split_punctuation_layer(vp, a, punct());
  const auto brute = testing::brute_punct_pairing(
      {split.sources.begin(), split.sources.end()},
      {split.targets.begin(), split.targets.end()}, a.links,
      [](std::size_t, std::size_t) { return true; });
  const LinkSet got = optimal_punct_links(vp, a, punct());
  LinkSet total = a.links;
  total.insert(got.begin(), got.end());
  EXPECT_EQ(crossing_count(total), brute.crossings);
  EXPECT_EQ(got, brute.links);
}

TEST(OptimalPunctLinksTest, ExistingPunctLinksAreReoptimized) {
  const VersePair vp = verse("a , b ,", "x , y ,");
  Alignment a = empty_alignment(vp, "ann");
  a.links = {{0, 0}, {2, 2}, {1, 3}, {3, 1}};
  EXPECT_EQ(optimal_punct_links(vp, a, punct()), (LinkSet{{1, 1}, {3, 3}}));
}

TEST(OptimalPunctLinksTest, DissimilarMarksStayUnpaired) {
  const VersePair vp = verse("a ( b", "x , y");
  EXPECT_TRUE(optimal_punct_links(vp, empty_alignment(vp, "ann"), punct())
                  .empty());
}

TEST(OptimalPunctLinksTest, NotTranslatedAndWordLinkedMarksExcluded) {
  const VersePair vp = verse("a , b ,", "x , y ,");
  Alignment a = empty_alignment(vp, "ann");
  a.nt_source = {1};
  a.links = {{2, 3}};  // word "b" linked to the last comma
  const auto split = split_punctuation_layer(vp, a, punct());
  EXPECT_EQ(split.sources, (IndexSet{3}));
  EXPECT_EQ(split.targets, (IndexSet{1}));
  EXPECT_EQ(optimal_punct_links(vp, a, punct()), (LinkSet{{3, 1}}));
}

TEST(OptimalPunctLinksTest, BoundExceeded) {
  const VersePair vp = verse(", , , ,", ",");
  const Alignment a = empty_alignment(vp, "ann");
  EXPECT_THROW(optimal_punct_links(vp, a, punct(), 3), ValidationError);
  EXPECT_NO_THROW(optimal_punct_links(vp, a, punct(), 4));
}

// Never worse than any exhaustively enumerated alternative.
TEST(OptimalPunctLinksPropertyTest, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(23);
  const std::vector<std::string> marks = {",", ",", ";", ".", "(", ","};
  for (int round = 0; round < 300; ++round) {
    std::string source, target;
    const std::size_t n_s = 2 + rng() % 7;
    const std::size_t n_t = 2 + rng() % 7;
    for (std::size_t i = 0; i < n_s; ++i) {
      source += (rng() % 2 ? "w " : marks[rng() % marks.size()] + " ");
    }
    for (std::size_t i = 0; i < n_t; ++i) {
      target += (rng() % 2 ? "w " : marks[rng() % marks.size()] + " ");
    }
    const VersePair vp = verse(source, target);
    Alignment a = empty_alignment(vp, "ann");
    for (std::size_t s = 0; s < vp.source_tokens.size(); ++s) {
      if (vp.source_tokens[s].surface != "w") continue;
      for (std::size_t t = 0; t < vp.target_tokens.size(); ++t) {
        if (vp.target_tokens[t].surface == "w" && rng() % 3 == 0) {
          a.links.insert({s, t});
        }
      }
    }
    const auto split = split_punctuation_layer(vp, a, punct());
    const auto brute = testing::brute_punct_pairing(
        {split.sources.begin(), split.sources.end()},
        {split.targets.begin(), split.targets.end()}, a.links,
        [&](std::size_t s, std::size_t t) {
          return punctuation_class(vp.source_tokens[s].surface) ==
                 punctuation_class(vp.target_tokens[t].surface);
        });
    const LinkSet got = optimal_punct_links(vp, a, punct());
    EXPECT_EQ(got, brute.links) << source << " | " << target;
  }
}

}  // namespace
}  // namespace blinker
