#include "extremal/switching.hpp"

#include <algorithm>

#include "extremal/operations.hpp"

namespace extremal {

SwitchContext SwitchContext::level(int i) { return {element_bit(i), interval(2, i - 1)}; }

SwitchContext SwitchContext::block(int t_prime, SetWord I) { return {I, interval(2, t_prime)}; }

void SwitchContext::validate(int n) const {
  if (meets(za, zb)) throw FamilyError("switch context: za and zb overlap");
  if (contains(za | zb, 1)) throw FamilyError("switch context: traces contain element 1");
  if (!subset_of(za | zb, ground(n))) throw FamilyError("switch context: traces leave [n]");
}

bool SwitchContext::in_a_side(SetWord p, int k) const {
  return !contains(p, 1) && set_size(p) == k - 1 && (p & (za | zb)) == za;
}

bool SwitchContext::in_b_side(SetWord p, int k) const {
  return !contains(p, 1) && set_size(p) == k && (p & (za | zb)) == zb;
}

SwitchResult bipartite_switch(const Family& f, const SwitchContext& ctx, const Family& b_target) {
  ctx.validate(f.n());
  if (b_target.n() != f.n() || b_target.k() != f.k())
    throw FamilyError("bipartite_switch: target family has different parameters");
  for (SetWord b : b_target)
    if (!ctx.in_b_side(b, f.k())) throw FamilyError("bipartite_switch: target set outside P_b");

  const SetWord one = element_bit(1);
  const int k = f.k();
  SwitchResult r;
  std::vector<SetWord> out;
  out.reserve(f.size());
  for (SetWord s : f) {
    if (contains(s, 1)) {
      if (ctx.in_a_side(s & ~one, k)) {
        ++r.removed_a;
        continue;
      }
    } else if (ctx.in_b_side(s, k) && !b_target.contains(s)) {
      ++r.removed_b;
      continue;
    }
    out.push_back(s);
  }
  out.insert(out.end(), b_target.begin(), b_target.end());

  // a-side: (k-1)-sets equal to za on za ∪ zb, free on the rest of [2, n].
  const SetWord free = interval(2, f.n()) & ~(ctx.za | ctx.zb);
  const int need = k - 1 - set_size(ctx.za);
  for_each_subset(free, need, [&](SetWord rest) {
    const SetWord p = rest | ctx.za;
    for (SetWord b : b_target)
      if (!meets(p, b)) return;
    out.push_back(p | one);
    ++r.added_a;
  });

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  r.family = Family::from_sorted_unchecked(f.params(), std::move(out));
  r.size_delta = static_cast<std::int64_t>(r.family.size()) - static_cast<std::int64_t>(f.size());
  r.intersecting = is_intersecting(r.family);
  return r;
}

}  // namespace extremal
