#include <gtest/gtest.h>

#include "extremal/family.hpp"
#include "extremal/family_json.hpp"
#include "oracles.hpp"

using namespace extremal;

TEST(Params, Validate) {
  EXPECT_NO_THROW((Params{9, 4}.validate()));
  EXPECT_NO_THROW((Params{64, 3}.validate()));
  EXPECT_THROW((Params{65, 3}.validate()), FamilyError);
  EXPECT_THROW((Params{4, 5}.validate()), FamilyError);
  EXPECT_THROW((Params{0, 0}.validate()), FamilyError);
  EXPECT_TRUE((Params{9, 4}.kneser_regime()));
  EXPECT_FALSE((Params{8, 4}.kneser_regime()));
  EXPECT_THROW((Params{8, 4}.require_kneser("x")), std::domain_error);
}

TEST(MakeFamily, DeduplicatesAndSorts) {
  const Family f = make_family({5, 2}, {{1, 2}, {2, 1}});
  EXPECT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0], from_elements({1, 2}));

  const Family g = make_family({5, 2}, {{4, 5}, {1, 3}, {2, 3}});
  ASSERT_EQ(g.size(), 3u);
  EXPECT_LT(g[0], g[1]);
  EXPECT_LT(g[1], g[2]);
}

TEST(MakeFamily, Empty) {
  const Family f = make_family({9, 4}, {});
  EXPECT_TRUE(f.empty());
  EXPECT_EQ(f.n(), 9);
  EXPECT_EQ(f.k(), 4);
}

TEST(MakeFamily, RejectsBadInput) {
  EXPECT_THROW(make_family({5, 2}, {{1, 6}}), FamilyError);
  EXPECT_THROW(make_family({5, 2}, {{0, 1}}), FamilyError);
  EXPECT_THROW(make_family({5, 2}, {{1, 2, 3}}), FamilyError);
  EXPECT_THROW(make_family({5, 2}, {{1, 1}}), FamilyError);
  EXPECT_THROW(Family::from_masks({5, 2}, {from_elements({1, 2, 3})}), FamilyError);
  EXPECT_THROW(Family::from_masks({5, 2}, {from_elements({1, 6})}), FamilyError);
}

TEST(Family, ContainsAndIncludes) {
  const Family f = make_family({6, 2}, {{1, 2}, {1, 3}, {2, 3}});
  const Family g = make_family({6, 2}, {{1, 3}});
  EXPECT_TRUE(f.contains(from_elements({2, 3})));
  EXPECT_FALSE(f.contains(from_elements({3, 4})));
  EXPECT_TRUE(f.includes(g));
  EXPECT_FALSE(g.includes(f));
  EXPECT_FALSE(f.includes(make_family({7, 2}, {})));
}

TEST(Family, CanonicalOrder) {
  const Family a = make_family({5, 2}, {{1, 2}});
  const Family b = make_family({5, 2}, {{1, 3}});
  const Family c = make_family({5, 2}, {{1, 2}, {1, 3}});
  EXPECT_LT(a, b);
  EXPECT_LT(a, c);  // prefix sorts first
  EXPECT_LT(c, b);
  EXPECT_LT(make_family({5, 2}, {{4, 5}}), make_family({6, 2}, {{1, 2}}));
}

TEST(Family, CompleteFamily) {
  EXPECT_EQ(complete_family({9, 4}).size(), oracle::choose(9, 4));
  EXPECT_EQ(complete_family({5, 0}).size(), 1u);
}

TEST(SetWord, Helpers) {
  EXPECT_EQ(interval(2, 5), from_elements({2, 3, 4, 5}));
  EXPECT_EQ(interval(5, 2), 0u);
  EXPECT_EQ(ground(64), ~SetWord{0});
  EXPECT_EQ(to_elements(from_elements({7, 1, 3})), (std::vector<int>{1, 3, 7}));
  EXPECT_EQ(min_element(from_elements({4, 9})), 4);
  std::vector<SetWord> seen;
  for_each_subset(interval(3, 8), 3, [&](SetWord s) { seen.push_back(s); });
  EXPECT_EQ(seen.size(), 20u);
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
  for (SetWord s : seen) EXPECT_TRUE(subset_of(s, interval(3, 8)));
}

TEST(FamilyJson, RoundTripIsByteIdentical) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Family f = oracle::random_family(8, 3, 0.3, rng);
    const std::string once = write_family(f);
    const Family back = read_family(once);
    EXPECT_EQ(back, f);
    EXPECT_EQ(write_family(back), once);
  }
}

TEST(FamilyJson, Format) {
  const Family f = make_family({5, 2}, {{2, 1}, {3, 4}});
  EXPECT_EQ(write_family(f), "{\"n\":5,\"k\":2,\"sets\":[[1,2],[3,4]]}\n");
}

TEST(FamilyJson, AcceptsUnsortedInputAndRejectsBadInput) {
  EXPECT_EQ(read_family(R"({"n":5,"k":2,"sets":[[4,3],[2,1]]})"), make_family({5, 2}, {{1, 2}, {3, 4}}));
  EXPECT_THROW(read_family(R"({"n":5,"k":2,"sets":[[1,9]]})"), FamilyError);
  EXPECT_THROW(read_family(R"({"n":5,"sets":[]})"), FamilyError);
  EXPECT_THROW(read_family("not json"), FamilyError);
}
