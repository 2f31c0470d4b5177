#include "extremal/operations.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace extremal {

namespace {

void require_element(const Family& f, int i, const char* op) {
  if (i < 1 || i > f.n())
    throw FamilyError(std::string(op) + ": element " + std::to_string(i) + " outside [1, " +
                      std::to_string(f.n()) + "]");
}

std::vector<SetWord> sorted_unique(std::vector<SetWord> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Is there a transversal of at most `budget` more elements, given `hit` already chosen?
bool cover_within(std::span<const SetWord> sets, SetWord hit, int budget) {
  auto open = std::find_if(sets.begin(), sets.end(), [&](SetWord s) { return !meets(s, hit); });
  if (open == sets.end()) return true;
  if (budget == 0) return false;
  for (SetWord rest = *open; rest != 0; rest &= rest - 1) {
    if (cover_within(sets, hit | (rest & (~rest + 1)), budget - 1)) return true;
  }
  return false;
}

}  // namespace

bool is_intersecting(const Family& f) {
  const auto sets = f.sets();
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = a + 1; b < sets.size(); ++b)
      if (!meets(sets[a], sets[b])) return false;
  return true;
}

bool is_cross_intersecting(const Family& a, const Family& b) {
  if (a.n() != b.n()) throw FamilyError("cross-intersection of families over different ground sets");
  for (SetWord x : a)
    for (SetWord y : b)
      if (!meets(x, y)) return false;
  return true;
}

Family link(const Family& f, int i) {
  require_element(f, i, "link");
  if (f.k() == 0) throw FamilyError("link of a 0-uniform family");
  const SetWord bit = element_bit(i);
  std::vector<SetWord> out;
  for (SetWord s : f)
    if (s & bit) out.push_back(s & ~bit);
  // Removing a fixed bit preserves the order of the survivors.
  return Family::from_sorted_unchecked({f.n(), f.k() - 1}, std::move(out));
}

Family deletion(const Family& f, int i) {
  require_element(f, i, "deletion");
  const SetWord bit = element_bit(i);
  std::vector<SetWord> out;
  for (SetWord s : f)
    if (!(s & bit)) out.push_back(s);
  return Family::from_sorted_unchecked(f.params(), std::move(out));
}

Diversity diversity(const Family& f) {
  std::vector<std::size_t> degree(f.n() + 1, 0);
  for (SetWord s : f)
    for (SetWord r = s; r != 0; r &= r - 1) ++degree[min_element(r)];
  Diversity best{f.size(), 1};
  bool first = true;
  for (int i = 1; i <= f.n(); ++i) {
    const std::size_t avoid = f.size() - degree[i];
    if (first || avoid < best.value) {
      best = {avoid, i};
      first = false;
    }
  }
  return best;
}

Permutation identity_permutation(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

SetWord apply_permutation(const Permutation& p, SetWord a) {
  SetWord out = 0;
  for (; a != 0; a &= a - 1) out |= element_bit(p[min_element(a) - 1]);
  return out;
}

Family apply_permutation(const Permutation& p, const Family& f) {
  if (static_cast<int>(p.size()) != f.n()) throw FamilyError("permutation size differs from n");
  std::vector<SetWord> out;
  out.reserve(f.size());
  for (SetWord s : f) out.push_back(apply_permutation(p, s));
  return Family::from_sorted_unchecked(f.params(), sorted_unique(std::move(out)));
}

std::pair<Family, Permutation> normalize_diversity_with_map(const Family& f) {
  Permutation p = identity_permutation(f.n());
  const int c = diversity(f).argmin;
  std::swap(p[0], p[c - 1]);
  return {c == 1 ? f : apply_permutation(p, f), p};
}

Family normalize_diversity(const Family& f) { return normalize_diversity_with_map(f).first; }

int covering_number(const Family& f) {
  if (f.empty()) throw FamilyError("covering number of an empty family");
  for (int c = 0;; ++c)
    if (cover_within(f.sets(), 0, c)) return c;
}

SetWord common_intersection(const Family& f) {
  if (f.empty()) throw FamilyError("common intersection of an empty family");
  SetWord acc = ground(f.n());
  for (SetWord s : f) acc &= s;
  return acc;
}

MinimalityResult minimality_witness(const Family& m) {
  MinimalityResult result;
  if (m.size() < 2) {
    result.reason = MinimalityFailure::TooFewMembers;
    return result;
  }
  const auto sets = m.sets();
  const std::size_t z = sets.size();
  // prefix[l] = AND of sets[0..l), suffix[l] = AND of sets[l..z)
  std::vector<SetWord> prefix(z + 1, ground(m.n())), suffix(z + 1, ground(m.n()));
  for (std::size_t l = 0; l < z; ++l) prefix[l + 1] = prefix[l] & sets[l];
  for (std::size_t l = z; l-- > 0;) suffix[l] = suffix[l + 1] & sets[l];
  const SetWord core = prefix[z];

  MinimalWitness w{core, {}};
  w.witnesses.reserve(z);
  for (std::size_t l = 0; l < z; ++l) {
    const SetWord others = prefix[l] & suffix[l + 1];
    const SetWord gained = others & ~core;
    if (gained == 0) {
      result.reason = MinimalityFailure::NotMinimal;
      return result;
    }
    w.witnesses.push_back(min_element(gained));
  }
  result.witness = std::move(w);
  return result;
}

Family shadow(const Family& f) {
  if (f.k() < 1) throw FamilyError("shadow of a 0-uniform family");
  std::vector<SetWord> out;
  out.reserve(f.size() * f.k());
  for (SetWord s : f)
    for (SetWord r = s; r != 0; r &= r - 1) out.push_back(s & ~(r & (~r + 1)));
  return Family::from_sorted_unchecked({f.n(), f.k() - 1}, sorted_unique(std::move(out)));
}

SetWord shift_set(SetWord a, int i, int j) {
  if (i >= j) throw FamilyError("shift requires i < j");
  if (contains(a, i) || !contains(a, j)) return a;
  return (a & ~element_bit(j)) | element_bit(i);
}

Family shift_family(const Family& f, int i, int j) {
  require_element(f, i, "shift");
  require_element(f, j, "shift");
  std::vector<SetWord> out;
  out.reserve(f.size());
  for (SetWord a : f) {
    const SetWord b = shift_set(a, i, j);
    out.push_back(b != a && f.contains(b) ? a : b);
  }
  return Family::from_sorted_unchecked(f.params(), sorted_unique(std::move(out)));
}

Family shift_closure(const Family& f, const std::vector<ShiftPair>& pairs) {
  for (auto [i, j] : pairs)
    if (i >= j) throw FamilyError("shift requires i < j");
  Family cur = f;
  while (true) {
    bool changed = false;
    for (auto [i, j] : pairs) {
      Family next = shift_family(cur, i, j);
      if (next != cur) {
        changed = true;
        cur = std::move(next);
      }
    }
    if (!changed) return cur;
  }
}

std::vector<ShiftPair> shift_pairs(int n, int lo, int hi) {
  std::vector<ShiftPair> out;
  for (int i = lo; i <= hi; ++i)
    for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  return out;
}

Family quotient(const Family& f, SetWord s, int j) {
  if (j < 1 || j > f.n()) throw FamilyError("quotient: j outside [1, n]");
  if (!subset_of(s, interval(2, j))) throw FamilyError("quotient: S is not a subset of [2, j]");
  const SetWord head = interval(1, j);
  std::vector<SetWord> out;
  for (SetWord g : f)
    if ((g & head) == s) out.push_back(g & ~s);
  // G -> G \ S is injective and order-preserving on members sharing the trace S.
  return Family::from_sorted_unchecked({f.n(), f.k() - set_size(s)}, std::move(out));
}

Family maximal_extension(const Family& m) {
  const Params p = m.params();
  if (p.k < 1) throw FamilyError("maximal_extension: uniformity must be positive");
  for (SetWord s : m)
    if (contains(s, 1)) throw FamilyError("maximal_extension: a member contains element 1");
  if (!is_intersecting(m)) throw FamilyError("maximal_extension: family is not intersecting");
  std::vector<SetWord> out(m.begin(), m.end());
  const SetWord one = element_bit(1);
  for_each_subset(interval(2, p.n), p.k - 1, [&](SetWord a) {
    for (SetWord s : m)
      if (!meets(a, s)) return;
    out.push_back(a | one);
  });
  return Family::from_sorted_unchecked(p, sorted_unique(std::move(out)));
}

Family max_cross_partner(const Family& h, int r) {
  if (r < 0 || r > h.n()) throw FamilyError("max_cross_partner: uniformity outside [0, n]");
  std::vector<SetWord> out;
  for_each_subset(ground(h.n()), r, [&](SetWord a) {
    for (SetWord s : h)
      if (!meets(a, s)) return;
    out.push_back(a);
  });
  return Family::from_sorted_unchecked({h.n(), r}, std::move(out));
}

}  // namespace extremal
