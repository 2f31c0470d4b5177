#include <gtest/gtest.h>

#include "extremal/constructions.hpp"
#include "extremal/operations.hpp"
#include "oracles.hpp"

using namespace extremal;

namespace {
Family sets(Params p, std::vector<std::vector<int>> s) { return make_family(p, s); }
}  // namespace

TEST(Intersecting, Examples) {
  EXPECT_TRUE(is_intersecting(full_star({5, 2}, 1)));
  EXPECT_FALSE(is_intersecting(sets({5, 2}, {{1, 2}, {3, 4}})));
  EXPECT_TRUE(is_intersecting(j_i({9, 4}, 2)));
  EXPECT_TRUE(is_intersecting(sets({5, 2}, {})));
}

TEST(Intersecting, MatchesOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Family f = trial % 2 ? oracle::random_intersecting(7, 3, rng, 1 + trial % 12)
                               : oracle::random_family(7, 3, 0.08, rng);
    EXPECT_EQ(is_intersecting(f), oracle::intersecting(oracle::sets_of(f)));
  }
}

TEST(CrossIntersecting, Examples) {
  const Family b = sets({5, 2}, {{3, 4}});
  EXPECT_TRUE(is_cross_intersecting(sets({5, 3}, {}), b));
  EXPECT_FALSE(is_cross_intersecting(sets({5, 2}, {{1, 2}}), b));
  EXPECT_TRUE(is_cross_intersecting(t2s(8, 3), f2s(8, 4, 3)));
  EXPECT_THROW(is_cross_intersecting(sets({6, 2}, {}), b), FamilyError);
}

TEST(LinkDeletion, Star) {
  const Family star = full_star({7, 3}, 1);
  const Family l = link(star, 1);
  EXPECT_EQ(l.k(), 2);
  EXPECT_EQ(l.size(), oracle::choose(6, 2));
  for (SetWord s : l) EXPECT_FALSE(contains(s, 1));
  EXPECT_TRUE(deletion(star, 1).empty());
}

TEST(Diversity, Examples) {
  const Diversity star = diversity(full_star({9, 4}, 3));
  EXPECT_EQ(star.value, 0u);
  EXPECT_EQ(star.argmin, 3);
  EXPECT_EQ(diversity(j_i({9, 4}, 2)).value, 2u);
  EXPECT_EQ(diversity(h_u({9, 4}, 4)).value, 1u);
}

TEST(Diversity, MatchesOracle) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const Family f = oracle::random_family(8, 3, 0.1, rng);
    const Diversity d = diversity(f);
    EXPECT_EQ(d.value, oracle::diversity(oracle::sets_of(f), 8));
    EXPECT_EQ(deletion(f, d.argmin).size(), d.value);
    for (int i = 1; i < d.argmin; ++i) EXPECT_GT(deletion(f, i).size(), d.value);
  }
}

TEST(NormalizeDiversity, Examples) {
  const Family j2 = j_i({9, 4}, 2);
  EXPECT_EQ(normalize_diversity(j2), j2);  // already attained at 1

  const Family star3 = full_star({7, 3}, 3);
  const auto [norm, perm] = normalize_diversity_with_map(star3);
  EXPECT_EQ(norm, full_star({7, 3}, 1));
  EXPECT_EQ(perm[0], 3);
  EXPECT_EQ(perm[2], 1);
  EXPECT_EQ(diversity(norm).argmin, 1);
}

TEST(CoveringNumber, Examples) {
  EXPECT_EQ(covering_number(full_star({7, 3}, 2)), 1);
  EXPECT_EQ(covering_number(t2s(8, 3)), 2);
  EXPECT_EQ(covering_number(sets({5, 2}, {{1, 2}, {3, 4}, {1, 3}})), 2);
  EXPECT_EQ(covering_number(sets({7, 2}, {{1, 2}, {3, 4}, {5, 6}})), 3);
  EXPECT_THROW(covering_number(sets({5, 2}, {})), FamilyError);
}

TEST(CoveringNumber, MatchesOracle) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    const Family f = oracle::random_family(7, 2 + trial % 2, 0.12, rng);
    if (f.empty()) continue;
    EXPECT_EQ(covering_number(f), oracle::covering_number(oracle::sets_of(f), 7));
  }
}

TEST(CommonIntersection, Examples) {
  EXPECT_EQ(common_intersection(sets({9, 4}, {{2, 3, 4, 5}})), interval(2, 5));
  EXPECT_EQ(common_intersection(sets({9, 4}, {{2, 3, 4, 5}, {2, 3, 4, 6}})), interval(2, 4));
  EXPECT_EQ(common_intersection(deletion(e_l({9, 4}, 3), 1)), interval(2, 4));
  EXPECT_THROW(common_intersection(sets({9, 4}, {})), FamilyError);
}

TEST(MinimalityWitness, Pair) {
  // {[2,t+1] ∪ {t+2}, [2,t+1] ∪ {t+3}} with t = 3
  const Family m = sets({9, 4}, {{2, 3, 4, 5}, {2, 3, 4, 6}});
  const MinimalityResult r = minimality_witness(m);
  ASSERT_TRUE(r);
  EXPECT_EQ(r.witness->core, interval(2, 4));
  EXPECT_EQ(r.witness->witnesses, (std::vector<int>{6, 5}));
}

TEST(MinimalityWitness, Failures) {
  const MinimalityResult one = minimality_witness(sets({9, 4}, {{2, 3, 4, 5}}));
  EXPECT_FALSE(one);
  EXPECT_EQ(one.reason, MinimalityFailure::TooFewMembers);
  // Dropping {1,2,5} leaves the core {1,2} unchanged.
  const MinimalityResult red = minimality_witness(sets({6, 3}, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}}));
  EXPECT_FALSE(red);
  EXPECT_EQ(red.reason, MinimalityFailure::NotMinimal);
}

TEST(MinimalityWitness, MatchesDefinition) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    const Family m = oracle::random_family(7, 4, 0.06, rng);
    if (m.size() < 2) continue;
    const auto all = oracle::sets_of(m);
    auto common = [&](std::size_t drop) {
      oracle::Set acc;
      for (int e = 1; e <= 7; ++e) {
        bool in_all = true;
        for (std::size_t i = 0; i < all.size(); ++i)
          if (i != drop && !oracle::has(all[i], e)) in_all = false;
        if (in_all) acc.push_back(e);
      }
      return acc;
    };
    const auto core = common(all.size());
    bool minimal = true;
    for (std::size_t i = 0; i < all.size(); ++i) minimal = minimal && common(i).size() > core.size();
    const MinimalityResult r = minimality_witness(m);
    EXPECT_EQ(static_cast<bool>(r), minimal);
    if (r) {
      EXPECT_EQ(r.witness->core, oracle::mask(core));
      for (std::size_t i = 0; i < all.size(); ++i) {
        const int w = r.witness->witnesses[i];
        EXPECT_FALSE(oracle::has(all[i], w));
        EXPECT_TRUE(oracle::has(common(i), w));
      }
    }
  }
}

TEST(Shadow, Examples) {
  EXPECT_EQ(shadow(sets({5, 3}, {{1, 2, 3}})), sets({5, 2}, {{1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(shadow(full_star({7, 3}, 1)), complete_family({7, 2}));
  EXPECT_THROW(shadow(sets({5, 0}, {})), FamilyError);
}

TEST(Shadow, MatchesOracle) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    const Family f = oracle::random_family(8, 3, 0.1, rng);
    const auto expected = oracle::shadow(oracle::sets_of(f));
    const Family got = shadow(f);
    ASSERT_EQ(got.size(), expected.size());
    for (SetWord s : got) EXPECT_TRUE(expected.count(oracle::elements(s)));
  }
}

TEST(Shift, Examples) {
  EXPECT_EQ(shift_set(from_elements({2, 3}), 1, 2), from_elements({1, 3}));
  EXPECT_EQ(shift_set(from_elements({1, 2}), 1, 2), from_elements({1, 2}));
  EXPECT_EQ(shift_set(from_elements({3, 4}), 1, 2), from_elements({3, 4}));
  EXPECT_THROW(shift_set(1, 2, 2), FamilyError);

  const Family f = sets({5, 2}, {{1, 3}, {2, 3}});
  EXPECT_EQ(shift_family(f, 1, 2), f);
  EXPECT_EQ(shift_family(sets({5, 2}, {{2, 3}}), 1, 2), sets({5, 2}, {{1, 3}}));
}

TEST(ShiftClosure, FixedPointAndCoreIntact) {
  const Family star = full_star({7, 3}, 1);
  EXPECT_EQ(shift_closure(star, shift_pairs(7, 1, 6)), star);

  // Members containing [2, t+1] survive shifts with 2 <= i <= t+1.
  const Family m = sets({9, 4}, {{2, 3, 4, 7}, {2, 3, 4, 9}});
  const Family closed = shift_closure(m, shift_pairs(9, 2, 4));
  EXPECT_EQ(closed, m);
}

TEST(ShiftPairs, Order) {
  const auto p = shift_pairs(5, 2, 3);
  const std::vector<ShiftPair> expected{{2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}};
  EXPECT_EQ(p, expected);
}

TEST(Quotient, Basics) {
  // With S = ∅ and j = 1 the quotient is the deletion of 1.
  std::mt19937_64 rng(16);
  const Family f = oracle::random_family(8, 3, 0.3, rng);
  EXPECT_EQ(quotient(f, 0, 1), deletion(f, 1));

  const Family g = sets({7, 3}, {{2, 4, 5}, {2, 3, 6}, {1, 2, 7}, {2, 5, 6}});
  // G ∩ [3] = {2}
  EXPECT_EQ(quotient(g, from_elements({2}), 3), sets({7, 2}, {{4, 5}, {5, 6}}));
  EXPECT_THROW(quotient(g, from_elements({1}), 3), FamilyError);
  EXPECT_THROW(quotient(g, from_elements({5}), 3), FamilyError);
}

TEST(MaximalExtension, Examples) {
  const Params p{9, 4};
  EXPECT_EQ(maximal_extension(sets(p, {{2, 3, 4, 5}})).size(), 53u);
  EXPECT_EQ(maximal_extension(Family::from_masks(p, {special_set(4, 1), special_set(4, 2)})), j_i(p, 2));
  EXPECT_EQ(maximal_extension(deletion(e_l(p, 4), 1)), e_l(p, 4));
  EXPECT_THROW(maximal_extension(sets(p, {{1, 2, 3, 4}})), FamilyError);
  EXPECT_THROW(maximal_extension(sets(p, {{2, 3, 4, 5}, {6, 7, 8, 9}})), FamilyError);
}

TEST(MaximalExtension, MatchesDefinition) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const Family m0 = oracle::random_intersecting(8, 3, rng, 1 + trial % 5);
    // Move everything off element 1 by relabeling 1 <-> an element missed by all members.
    int free = 0;
    for (int e = 8; e >= 1 && !free; --e)
      if (std::none_of(m0.begin(), m0.end(), [&](SetWord s) { return contains(s, e); })) free = e;
    if (!free) continue;
    Permutation p = identity_permutation(8);
    std::swap(p[0], p[free - 1]);
    const Family m = apply_permutation(p, m0);
    const Family ext = maximal_extension(m);
    EXPECT_TRUE(is_intersecting(ext));
    EXPECT_EQ(deletion(ext, 1), m);
    // No k-set through 1 outside ext can be added.
    const std::size_t through = oracle::count_if_k_sets(8, 3, [&](const oracle::Set& s) {
      if (!oracle::has(s, 1)) return false;
      for (SetWord t : m)
        if (!oracle::share(s, oracle::elements(t))) return false;
      return true;
    });
    EXPECT_EQ(ext.size(), m.size() + through);
  }
}

TEST(MaxCrossPartner, Examples) {
  EXPECT_EQ(max_cross_partner(t2s(8, 3), 3).size(), 36u);
  EXPECT_EQ(max_cross_partner(sets({8, 3}, {}), 3).size(), oracle::choose(8, 3));
  std::mt19937_64 rng(18);
  for (int trial = 0; trial < 50; ++trial) {
    const Family h = oracle::random_family(8, 3, 0.05, rng);
    const Family a = max_cross_partner(h, 4);
    EXPECT_TRUE(is_cross_intersecting(a, h));
    const std::size_t expected = oracle::count_if_k_sets(8, 4, [&](const oracle::Set& s) {
      for (SetWord t : h)
        if (!oracle::share(s, oracle::elements(t))) return false;
      return true;
    });
    EXPECT_EQ(a.size(), expected);
  }
}
