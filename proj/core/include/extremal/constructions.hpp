#pragma once

#include "extremal/family.hpp"

namespace extremal {

// All k-sets through `center`.
Family full_star(Params params, int center);

// Sets containing [2, u+1], plus sets through 1 meeting [2, u+1]. 2 <= u <= k.
// u = k is the Hilton-Milner family.
Family h_u(Params params, int u);

// I_i = [i+1, k+i].
SetWord special_set(int k, int i);

// {I_1, I_i} plus sets through 1 meeting both. 1 <= i <= k, n >= k + i.
Family j_i(Params params, int i);

// Bar-1 part {[2,k] ∪ {x} : x ∈ [k+1, k+l]}, completed by maximal_extension.
// 2 <= l <= n - k.
Family e_l(Params params, int l);

// {[1,s], [s+1,2s]} over [m]. Requires m > 2s.
Family t2s(int m, int s);

// Every (k-1)-subset of [m] meeting both [1,s] and [s+1,2s]. Requires m >= k + s.
Family f2s(int m, int k, int s);

}  // namespace extremal
