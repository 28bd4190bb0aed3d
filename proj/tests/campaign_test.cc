#include "blinker/campaign.hpp"

#include <gtest/gtest.h>

#include "blinker/errors.hpp"
#include "support/fixtures.hpp"

namespace blinker {
namespace {

std::vector<VersePair> corpus(std::size_t n) {
  std::vector<VersePair> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(make_verse_pair("v" + std::to_string(i), "en", "fr",
                                  "word " + std::to_string(i), "mot",
                                  testing::default_table()));
  }
  return out;
}

TEST(MakeCampaignTest, TwoGroupsNinetyTasks) {
  const Campaign c =
      make_campaign("pilot", corpus(50), 10,
                    {{"a1", "a2", "a3", "a4"}, {"b1", "b2", "b3", "b4", "b5"}},
                    7);
  ASSERT_EQ(c.verse_sets.size(), 2u);
  EXPECT_EQ(c.verse_sets[0].size(), 10u);
  EXPECT_EQ(c.status.size(), 90u);
  EXPECT_EQ(c.count(TaskStatus::kPending), 90u);
  EXPECT_EQ(c.count(TaskStatus::kSubmitted), 0u);
  for (const auto& v : c.verse_sets[0]) {
    EXPECT_EQ(std::count(c.verse_sets[1].begin(), c.verse_sets[1].end(), v),
              0);
  }
  EXPECT_EQ(c.group_of("b3"), 1u);
  EXPECT_FALSE(c.group_of("zz"));
  EXPECT_TRUE(c.assigned("a1", c.verse_sets[0][3]));
  EXPECT_FALSE(c.assigned("a1", c.verse_sets[1][3]));
  EXPECT_EQ(c.next_pending("b1"), c.verse_sets[1][0]);
}

TEST(MakeCampaignTest, SingleGroup) {
  const Campaign c = make_campaign("solo", corpus(5), 5, {{"x"}}, 1);
  EXPECT_EQ(c.status.size(), 5u);
}

TEST(MakeCampaignTest, NextPendingAdvances) {
  Campaign c = make_campaign("c", corpus(5), 3, {{"x"}}, 1);
  const std::string first = *c.next_pending("x");
  c.status[{"x", first}] = TaskStatus::kSubmitted;
  EXPECT_EQ(c.next_pending("x"), c.verse_sets[0][1]);
  for (const auto& v : c.verse_sets[0]) c.status[{"x", v}] = TaskStatus::kSubmitted;
  EXPECT_FALSE(c.next_pending("x"));
}

TEST(MakeCampaignTest, Deterministic) {
  const auto groups = std::vector<std::vector<std::string>>{{"a"}, {"b"}};
  EXPECT_EQ(make_campaign("c", corpus(30), 4, groups, 9),
            make_campaign("c", corpus(30), 4, groups, 9));
}

TEST(MakeCampaignTest, InvalidGroups) {
  EXPECT_THROW(make_campaign("c", corpus(10), 2, {}, 1), ValidationError);
  EXPECT_THROW(make_campaign("c", corpus(10), 2, {{}}, 1), ValidationError);
  EXPECT_THROW(make_campaign("c", corpus(10), 2, {{"a"}, {"a"}}, 1),
               ValidationError);
  EXPECT_THROW(make_campaign("c", corpus(10), 2, {{""}}, 1), ValidationError);
  EXPECT_THROW(make_campaign("c", corpus(3), 2, {{"a"}, {"b"}}, 1),
               ValidationError);
}

}  // namespace
}  // namespace blinker
