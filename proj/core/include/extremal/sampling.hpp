#pragma once

#include <cstdint>
#include <optional>

#include "extremal/family.hpp"

namespace extremal {

// A maximal intersecting family in C([n], k) grown greedily from a random
// seed fragment that avoids a random center. Tries to hit the requested
// diversity exactly; falls back to the first attempt exceeding it; nullopt
// when no attempt reaches it. Deterministic in `seed`. Requires n > 2k.
std::optional<Family> random_intersecting(Params params, std::size_t target_diversity,
                                          std::uint64_t seed);

// A uniformly random relabeling of [n].
std::vector<int> random_permutation(int n, std::uint64_t seed);

}  // namespace extremal
