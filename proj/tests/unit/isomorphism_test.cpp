#include <gtest/gtest.h>

#include "extremal/constructions.hpp"
#include "extremal/isomorphism.hpp"
#include "extremal/sampling.hpp"
#include "oracles.hpp"

using namespace extremal;

TEST(Isomorphism, SelfIsIdentity) {
  const Family f = j_i({9, 4}, 3);
  const auto p = are_isomorphic(f, f);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(*p, identity_permutation(9));
}

TEST(Isomorphism, NamedPairs) {
  for (Params p : {Params{9, 4}, Params{11, 5}}) {
    const Family j2 = j_i(p, 2), e2 = e_l(p, 2);
    const auto perm = are_isomorphic(j2, e2);
    ASSERT_TRUE(perm.has_value());
    EXPECT_EQ(apply_permutation(*perm, j2), e2);
  }
  EXPECT_FALSE(are_isomorphic(j_i({10, 4}, 2), j_i({10, 4}, 3)));
  EXPECT_FALSE(are_isomorphic(full_star({9, 4}, 1), h_u({9, 4}, 4)));
  // E_5 and H_3 coincide at (9,4).
  EXPECT_TRUE(are_isomorphic(e_l({9, 4}, 5), h_u({9, 4}, 3)));
}

TEST(Isomorphism, SameSizeDifferentStructure) {
  // |J_3| = |J_4| at (9,4) but the two differ.
  const Family a = j_i({9, 4}, 3), b = j_i({9, 4}, 4);
  ASSERT_EQ(a.size(), b.size());
  EXPECT_EQ(are_isomorphic(a, b).has_value(), oracle::isomorphic(a, b));
}

TEST(Isomorphism, RandomRelabelings) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const Family f = oracle::random_family(8, 3, 0.15, rng);
    const Permutation p = random_permutation(8, rng());
    const Family g = apply_permutation(p, f);
    const auto found = are_isomorphic(f, g);
    ASSERT_TRUE(found.has_value());
    EXPECT_EQ(apply_permutation(*found, f), g);
    EXPECT_EQ(iso_fingerprint(f), iso_fingerprint(g));
  }
}

TEST(Isomorphism, MatchesBruteForce) {
  std::mt19937_64 rng(22);
  int positives = 0;
  for (int trial = 0; trial < 150; ++trial) {
    // Same-size pairs of sparse families over [6], where accidental isomorphism is common.
    const Family f = oracle::random_intersecting(6, 2, rng, 3);
    const Family g = oracle::random_intersecting(6, 2, rng, 3);
    const bool expected = oracle::isomorphic(f, g);
    positives += expected;
    EXPECT_EQ(are_isomorphic(f, g).has_value(), expected) << describe(f) << " vs " << describe(g);
  }
  EXPECT_GT(positives, 0);
  for (int trial = 0; trial < 60; ++trial) {
    const Family f = oracle::random_family(7, 3, 0.12, rng);
    const Family g = oracle::random_family(7, 3, 0.12, rng);
    if (f.size() != g.size()) continue;
    EXPECT_EQ(are_isomorphic(f, g).has_value(), oracle::isomorphic(f, g));
  }
}

TEST(Isomorphism, ParameterMismatch) {
  EXPECT_FALSE(are_isomorphic(full_star({9, 4}, 1), full_star({10, 4}, 1)));
  EXPECT_FALSE(are_isomorphic(full_star({9, 4}, 1), j_i({9, 4}, 2)));
}
