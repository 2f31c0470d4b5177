#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace extremal {

// One subset of [n], n <= 64. Element i is bit i-1.
using SetWord = std::uint64_t;

inline constexpr int kMaxGround = 64;

constexpr SetWord element_bit(int i) { return SetWord{1} << (i - 1); }

constexpr bool contains(SetWord a, int i) { return (a >> (i - 1)) & 1U; }

constexpr int set_size(SetWord a) { return std::popcount(a); }

constexpr bool subset_of(SetWord a, SetWord b) { return (a & ~b) == 0; }

constexpr bool meets(SetWord a, SetWord b) { return (a & b) != 0; }

// [a, b]; empty when a > b.
constexpr SetWord interval(int a, int b) {
  if (a > b) return 0;
  const SetWord upto_b = b >= 64 ? ~SetWord{0} : (SetWord{1} << b) - 1;
  const SetWord below_a = (SetWord{1} << (a - 1)) - 1;
  return upto_b & ~below_a;
}

// [n]
constexpr SetWord ground(int n) { return interval(1, n); }

// Smallest element of a nonempty set.
constexpr int min_element(SetWord a) { return std::countr_zero(a) + 1; }

SetWord from_elements(const std::vector<int>& elements);

std::vector<int> to_elements(SetWord a);

// Next set of the same size in increasing numeric order (Gosper). Caller
// stops once the result leaves the ground mask.
constexpr SetWord next_same_size(SetWord a) {
  const SetWord low = a & (~a + 1);
  const SetWord ripple = a + low;
  if (ripple == 0) return 0;
  return ripple | (((a ^ ripple) >> 2) / low);
}

// Calls fn(SetWord) for every r-subset of `universe`, in increasing order of
// the packed index (which equals increasing mask order).
template <typename Fn>
void for_each_subset(SetWord universe, int r, Fn&& fn) {
  const int m = set_size(universe);
  if (r < 0 || r > m) return;
  std::vector<int> pos;
  pos.reserve(m);
  for (SetWord u = universe; u != 0; u &= u - 1) pos.push_back(std::countr_zero(u));
  if (r == 0) {
    fn(SetWord{0});
    return;
  }
  // Iterate packed r-subsets of [0, m) with Gosper's hack, then scatter.
  SetWord packed = (SetWord{1} << r) - 1;
  const SetWord limit = m == 64 ? 0 : (SetWord{1} << m);
  while (true) {
    SetWord out = 0;
    for (SetWord p = packed; p != 0; p &= p - 1) out |= SetWord{1} << pos[std::countr_zero(p)];
    fn(out);
    if (r == m) break;
    const SetWord next = next_same_size(packed);
    if (next == 0 || (limit != 0 && next >= limit)) break;
    packed = next;
  }
}

}  // namespace extremal
