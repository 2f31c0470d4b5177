#include "extremal/sampling.hpp"

#include <algorithm>
#include <random>

#include "extremal/constructions.hpp"
#include "extremal/operations.hpp"

namespace extremal {

namespace {

constexpr int kAttempts = 64;

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

SetWord random_subset(std::mt19937_64& rng, SetWord universe, int r) {
  std::vector<int> elems = to_elements(universe);
  std::shuffle(elems.begin(), elems.end(), rng);
  SetWord out = 0;
  for (int i = 0; i < r; ++i) out |= element_bit(elems[i]);
  return out;
}

// Seed sets avoiding `center`: a common (k-1)-core with distinct tails.
std::vector<SetWord> core_fragment(std::mt19937_64& rng, Params p, int center, std::size_t count) {
  const SetWord avail = ground(p.n) & ~element_bit(center);
  const SetWord core = random_subset(rng, avail, p.k - 1);
  const SetWord tails = avail & ~core;
  if (static_cast<int>(count) > set_size(tails)) return {};
  std::vector<int> t = to_elements(tails);
  std::shuffle(t.begin(), t.end(), rng);
  std::vector<SetWord> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(core | element_bit(t[i]));
  return out;
}

// Seed sets avoiding `center`, pairwise intersecting, drawn by rejection.
std::vector<SetWord> loose_fragment(std::mt19937_64& rng, Params p, int center, std::size_t count) {
  const SetWord avail = ground(p.n) & ~element_bit(center);
  std::vector<SetWord> out;
  for (int tries = 0; out.size() < count && tries < 200 * static_cast<int>(count + 1); ++tries) {
    const SetWord s = random_subset(rng, avail, p.k);
    if (std::find(out.begin(), out.end(), s) != out.end()) continue;
    if (std::all_of(out.begin(), out.end(), [&](SetWord o) { return meets(o, s); })) out.push_back(s);
  }
  if (out.size() < count) return {};
  return out;
}

Family greedy_complete(std::mt19937_64& rng, Params p, std::vector<SetWord> seed, int center,
                       bool center_first) {
  std::vector<SetWord> through, avoiding;
  for_each_subset(ground(p.n), p.k, [&](SetWord s) {
    (center_first && contains(s, center) ? through : avoiding).push_back(s);
  });
  std::shuffle(through.begin(), through.end(), rng);
  std::shuffle(avoiding.begin(), avoiding.end(), rng);
  std::vector<SetWord> fam = std::move(seed);
  auto offer = [&](SetWord s) {
    for (SetWord f : fam)
      if (f == s || !meets(f, s)) return;
    fam.push_back(s);
  };
  for (SetWord s : through) offer(s);
  for (SetWord s : avoiding) offer(s);
  return Family::from_masks(p, std::move(fam));
}

}  // namespace

std::vector<int> random_permutation(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> p = identity_permutation(n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

std::optional<Family> random_intersecting(Params params, std::size_t target_diversity,
                                          std::uint64_t seed) {
  params.validate();
  params.require_kneser("random_intersecting");
  std::mt19937_64 rng(seed);
  if (target_diversity == 0) return full_star(params, uniform(rng, 1, params.n));

  std::optional<Family> fallback;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const int center = uniform(rng, 1, params.n);
    const int strategy = uniform(rng, 0, 2);
    std::vector<SetWord> seed_sets;
    if (strategy == 0) seed_sets = core_fragment(rng, params, center, target_diversity);
    if (strategy == 1 || (strategy == 0 && seed_sets.empty()))
      seed_sets = loose_fragment(rng, params, center, target_diversity);
    Family f = greedy_complete(rng, params, std::move(seed_sets), center, strategy != 2);
    const std::size_t g = diversity(f).value;
    if (g == target_diversity) return f;
    if (g > target_diversity && !fallback) fallback = std::move(f);
  }
  return fallback;
}

}  // namespace extremal
