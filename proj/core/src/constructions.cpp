#include "extremal/constructions.hpp"

#include <string>

#include "extremal/operations.hpp"

namespace extremal {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw FamilyError(msg);
}

template <typename Pred>
Family filter_complete(Params params, Pred&& keep) {
  std::vector<SetWord> out;
  for_each_subset(ground(params.n), params.k, [&](SetWord s) {
    if (keep(s)) out.push_back(s);
  });
  return Family::from_sorted_unchecked(params, std::move(out));
}

}  // namespace

Family full_star(Params params, int center) {
  params.validate();
  require(params.k >= 1, "full_star: k must be positive");
  require(center >= 1 && center <= params.n, "full_star: center out of range");
  return filter_complete(params, [&](SetWord s) { return contains(s, center); });
}

Family h_u(Params params, int u) {
  params.validate();
  require(u >= 2 && u <= params.k, "h_u: u must lie in [2, k]");
  require(params.n >= u + 1, "h_u: need n >= u + 1");
  const SetWord head = interval(2, u + 1);
  return filter_complete(params, [&](SetWord s) {
    return subset_of(head, s) || (contains(s, 1) && meets(s, head));
  });
}

SetWord special_set(int k, int i) { return interval(i + 1, k + i); }

Family j_i(Params params, int i) {
  params.validate();
  require(i >= 1 && i <= params.k, "j_i: i must lie in [1, k]");
  require(params.n >= params.k + i, "j_i: need n >= k + i");
  const SetWord first = special_set(params.k, 1);
  const SetWord other = special_set(params.k, i);
  return filter_complete(params, [&](SetWord s) {
    return s == first || s == other || (contains(s, 1) && meets(s, first) && meets(s, other));
  });
}

Family e_l(Params params, int l) {
  params.validate();
  require(params.k >= 2, "e_l: k must be at least 2");
  require(l >= 2 && l <= params.n - params.k, "e_l: l must lie in [2, n-k]");
  const SetWord core = interval(2, params.k);
  std::vector<SetWord> bar;
  for (int x = params.k + 1; x <= params.k + l; ++x) bar.push_back(core | element_bit(x));
  return maximal_extension(Family::from_masks(params, std::move(bar)));
}

Family t2s(int m, int s) {
  require(s >= 1 && m > 2 * s, "t2s: need s >= 1 and m > 2s");
  return Family::from_masks({m, s}, {interval(1, s), interval(s + 1, 2 * s)});
}

Family f2s(int m, int k, int s) {
  require(k >= 2 && s >= 1, "f2s: need k >= 2 and s >= 1");
  require(m >= k + s && m >= 2 * s, "f2s: need m >= k + s");
  // Built directly rather than through t2s so that m = 2s (allowed when k <= s) works.
  const Family pair = Family::from_masks({m, s}, {interval(1, s), interval(s + 1, 2 * s)});
  return max_cross_partner(pair, k - 1);
}

}  // namespace extremal
