#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "extremal/family.hpp"

namespace extremal {

bool is_intersecting(const Family& f);

// Families may have different uniformities but must share the ground set.
bool is_cross_intersecting(const Family& a, const Family& b);

// F(i): members containing i, with i removed. Uniformity k-1.
Family link(const Family& f, int i);
// F(bar i): members avoiding i.
Family deletion(const Family& f, int i);

struct Diversity {
  std::size_t value = 0;
  int argmin = 1;  // smallest element attaining the minimum
};

// min over i in [n] of |F(bar i)|.
Diversity diversity(const Family& f);

// A permutation of [n]: image[e-1] is the image of element e.
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
SetWord apply_permutation(const Permutation& p, SetWord a);
Family apply_permutation(const Permutation& p, const Family& f);

// Swaps 1 with the diversity argmin so that the minimum is attained at 1.
Family normalize_diversity(const Family& f);
// Same, also returning the relabeling used.
std::pair<Family, Permutation> normalize_diversity_with_map(const Family& f);

// Smallest transversal size. Throws FamilyError on an empty family.
int covering_number(const Family& f);

// Bitwise AND of all members. Throws FamilyError on an empty family.
SetWord common_intersection(const Family& f);

struct MinimalWitness {
  SetWord core = 0;
  // witnesses[l]: the smallest element in every member except member l.
  std::vector<int> witnesses;
};

enum class MinimalityFailure { TooFewMembers, NotMinimal };

struct MinimalityResult {
  std::optional<MinimalWitness> witness;
  MinimalityFailure reason = MinimalityFailure::NotMinimal;  // meaningful only on failure

  explicit operator bool() const { return witness.has_value(); }
};

// Minimality with respect to common intersection. Requires at least two members.
MinimalityResult minimality_witness(const Family& m);

// All (k-1)-subsets of members. Requires k >= 1.
Family shadow(const Family& f);

// S_ij on a set; requires i < j.
SetWord shift_set(SetWord a, int i, int j);
// S_ij on a family, keeping A when S_ij(A) is already present.
Family shift_family(const Family& f, int i, int j);

using ShiftPair = std::pair<int, int>;

// Applies the listed shifts in order, repeatedly, until a full pass is a no-op.
Family shift_closure(const Family& f, const std::vector<ShiftPair>& pairs);

// Pairs (i, j) with lo <= i <= hi and i < j <= n, ordered by i then j.
std::vector<ShiftPair> shift_pairs(int n, int lo, int hi);

// F(S, [j]): members G with G ∩ [j] = S, returned as G \ S in original labels.
// Requires S ⊆ [2, j]. Uniformity k - |S|.
Family quotient(const Family& f, SetWord s, int j);

// m ∪ {{1} ∪ A : A ∈ C([2,n], k-1), A meets every member of m}.
// m must be intersecting with no member containing 1.
Family maximal_extension(const Family& m);

// All r-subsets of [n] meeting every member of h.
Family max_cross_partner(const Family& h, int r);

}  // namespace extremal
