#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "extremal/family.hpp"
#include "extremal/operations.hpp"

namespace extremal {

// Exact isomorphism test by backtracking over relabelings of [n]. Candidates
// are pruned by element degree, the multiset of pair co-degrees, and
// co-degree consistency with already-placed elements; sets whose elements are
// all placed are checked as soon as the last one is assigned.
//
// Returns p with apply_permutation(p, f) == g, or nullopt.
std::optional<Permutation> are_isomorphic(const Family& f, const Family& g);

// Relabeling-invariant fingerprint (size, sorted degree sequence, sorted
// co-degree multiset). Equal fingerprints are necessary for isomorphism.
std::vector<std::int64_t> iso_fingerprint(const Family& f);

}  // namespace extremal
