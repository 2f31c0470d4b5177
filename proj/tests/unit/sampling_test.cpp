#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "extremal/operations.hpp"
#include "extremal/sampling.hpp"

using namespace extremal;

namespace {

bool maximal(const Family& f) {
  bool ok = true;
  for_each_subset(ground(f.n()), f.k(), [&](SetWord a) {
    if (f.contains(a)) return;
    if (std::all_of(f.begin(), f.end(), [&](SetWord b) { return meets(a, b); })) ok = false;
  });
  return ok;
}

}  // namespace

TEST(RandomIntersecting, MaximalAndDeterministic) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto f = random_intersecting({9, 4}, seed % 6, seed);
    ASSERT_TRUE(f.has_value()) << seed;
    EXPECT_TRUE(is_intersecting(*f));
    EXPECT_TRUE(maximal(*f));
    EXPECT_EQ(random_intersecting({9, 4}, seed % 6, seed), f);
  }
}

TEST(RandomIntersecting, UsuallyHitsTheTarget) {
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto f = random_intersecting({8, 3}, 3, seed);
    if (f && diversity(*f).value == 3) ++hits;
    if (f) EXPECT_GE(diversity(*f).value, 3u);
  }
  EXPECT_GT(hits, 0);
}

TEST(RandomPermutation, IsAPermutation) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    std::vector<int> p = random_permutation(10, seed);
    EXPECT_EQ(p, random_permutation(10, seed));
    std::sort(p.begin(), p.end());
    std::vector<int> id(10);
    std::iota(id.begin(), id.end(), 1);
    EXPECT_EQ(p, id);
  }
  EXPECT_NE(random_permutation(12, 1), random_permutation(12, 2));
}
