#pragma once

#include <cstdint>

#include "extremal/family.hpp"

namespace extremal {

// Traces that select the two sides of a switching graph inside [2, n].
//   a-side P_a: (k-1)-sets P ⊆ [2,n] with P ∩ (za ∪ zb) = za  (stored in F as {1} ∪ P)
//   b-side P_b: k-sets P ⊆ [2,n] with P ∩ (za ∪ zb) = zb
struct SwitchContext {
  SetWord za = 0;
  SetWord zb = 0;

  // za = {i}, zb = [2, i-1]
  static SwitchContext level(int i);
  // za = I, zb = [2, t']
  static SwitchContext block(int t_prime, SetWord I);

  void validate(int n) const;
  bool in_a_side(SetWord p, int k) const;  // p without element 1
  bool in_b_side(SetWord p, int k) const;
};

struct SwitchResult {
  Family family;
  std::int64_t size_delta = 0;
  bool intersecting = false;
  std::size_t removed_b = 0;
  std::size_t removed_a = 0;
  std::size_t added_a = 0;
};

// Replaces F(bar 1) ∩ P_b by b_target and F(1) ∩ P_a by every a-side set
// meeting all of b_target. The result is not checked for intersection beyond
// reporting it; b_target must lie inside P_b.
SwitchResult bipartite_switch(const Family& f, const SwitchContext& ctx, const Family& b_target);

}  // namespace extremal
