#pragma once

// Slow, definition-level reimplementations used to cross-check the library.
// Nothing here calls into extremal algorithms; only the Family/Params types are shared.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "extremal/family.hpp"

namespace oracle {

using extremal::Family;
using extremal::Params;
using extremal::SetWord;
using Set = std::vector<int>;  // sorted 1-based elements

inline Set elements(SetWord a) {
  Set out;
  for (int i = 1; i <= 64; ++i)
    if ((a >> (i - 1)) & 1U) out.push_back(i);
  return out;
}

inline SetWord mask(const Set& s) {
  SetWord m = 0;
  for (int e : s) m |= SetWord{1} << (e - 1);
  return m;
}

inline bool has(const Set& s, int e) { return std::find(s.begin(), s.end(), e) != s.end(); }

inline bool share(const Set& a, const Set& b) {
  for (int x : a)
    if (has(b, x)) return true;
  return false;
}

// All r-subsets of [n] by scanning every bitmask below 2^n.
inline std::vector<Set> subsets(int n, int r) {
  std::vector<Set> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
    if (__builtin_popcountll(m) == r) out.push_back(elements(m));
  return out;
}

inline std::uint64_t choose(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  std::uint64_t c = 1;
  for (int i = 1; i <= r; ++i) c = c * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return c;
}

inline std::vector<Set> sets_of(const Family& f) {
  std::vector<Set> out;
  for (SetWord s : f) out.push_back(elements(s));
  return out;
}

inline std::size_t count_if_k_sets(int n, int k, const std::function<bool(const Set&)>& pred) {
  std::size_t c = 0;
  for (const Set& s : subsets(n, k)) c += pred(s);
  return c;
}

inline bool intersecting(const std::vector<Set>& f) {
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      if (!share(f[i], f[j])) return false;
  return true;
}

inline std::size_t diversity(const std::vector<Set>& f, int n) {
  std::size_t best = f.size();
  for (int i = 1; i <= n; ++i) {
    std::size_t avoid = 0;
    for (const Set& s : f) avoid += !has(s, i);
    best = std::min(best, avoid);
  }
  return best;
}

// Smallest t such that some t-subset of [n] meets every member.
inline int covering_number(const std::vector<Set>& f, int n) {
  for (int t = 0; t <= n; ++t)
    for (const Set& c : subsets(n, t))
      if (std::all_of(f.begin(), f.end(), [&](const Set& s) { return share(s, c); })) return t;
  return -1;
}

inline std::set<Set> shadow(const std::vector<Set>& f) {
  std::set<Set> out;
  for (const Set& s : f)
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Set t;
      for (std::size_t q = 0; q < s.size(); ++q)
        if (q != drop) t.push_back(s[q]);
      out.insert(t);
    }
  return out;
}

// Isomorphism by trying all n! relabelings (n <= 8).
inline bool isomorphic(const Family& f, const Family& g) {
  if (f.params() != g.params() || f.size() != g.size()) return false;
  const int n = f.n();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::set<Set> target;
  for (const Set& s : sets_of(g)) target.insert(s);
  do {
    bool ok = true;
    for (const Set& s : sets_of(f)) {
      Set img;
      for (int e : s) img.push_back(p[e - 1]);
      std::sort(img.begin(), img.end());
      if (!target.count(img)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Maximal intersecting subfamilies of C([n], k) by checking every subfamily.
// Only for C(n, k) <= 20.
inline std::set<std::vector<SetWord>> maximal_intersecting(int n, int k) {
  const std::vector<Set> all = subsets(n, k);
  const std::size_t m = all.size();
  std::set<std::vector<SetWord>> out;
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << m); ++pick) {
    std::vector<Set> f;
    for (std::size_t i = 0; i < m; ++i)
      if ((pick >> i) & 1U) f.push_back(all[i]);
    if (!intersecting(f)) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < m && maximal; ++i) {
      if ((pick >> i) & 1U) continue;
      if (std::all_of(f.begin(), f.end(), [&](const Set& s) { return share(s, all[i]); })) maximal = false;
    }
    if (!maximal) continue;
    std::vector<SetWord> masks;
    for (const Set& s : f) masks.push_back(mask(s));
    std::sort(masks.begin(), masks.end());
    out.insert(masks);
  }
  return out;
}

// Random k-uniform family over [n] with each k-set kept with probability p.
inline Family random_family(int n, int k, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(p);
  std::vector<SetWord> sets;
  for (const Set& s : subsets(n, k))
    if (keep(rng)) sets.push_back(mask(s));
  return Family::from_masks({n, k}, sets);
}

// Random intersecting family: greedy over a shuffled C([n], k).
inline Family random_intersecting(int n, int k, std::mt19937_64& rng, std::size_t cap) {
  std::vector<Set> all = subsets(n, k);
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<Set> f;
  for (const Set& s : all) {
    if (f.size() >= cap) break;
    if (std::all_of(f.begin(), f.end(), [&](const Set& t) { return share(s, t); })) f.push_back(s);
  }
  std::vector<SetWord> masks;
  for (const Set& s : f) masks.push_back(mask(s));
  return Family::from_masks({n, k}, masks);
}

}  // namespace oracle
