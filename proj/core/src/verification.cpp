#include "extremal/verification.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "extremal/constructions.hpp"
#include "extremal/isomorphism.hpp"
#include "extremal/operations.hpp"
#include "extremal/sampling.hpp"

namespace extremal {

namespace {

std::string j_label(int i) { return "J_" + std::to_string(i); }
std::string e_label(int l) { return "E_" + std::to_string(l); }
std::string h_label(int u) { return "H_" + std::to_string(u); }

// (label, allowed) for f against the references, first match wins.
std::pair<std::string, bool> classify(const Family& f, const std::vector<ClassReference>& refs,
                                      bool other_allowed) {
  for (const auto& ref : refs)
    if (ref.family.size() == f.size() && are_isomorphic(ref.family, f)) return {ref.label, ref.allowed};
  return {"other", other_allowed};
}

// Adds `count` members of f's class, creating the class if needed.
void add_to_class(std::vector<EqualityClass>& classes, const Family& f, std::uint64_t count,
                  const std::vector<ClassReference>& refs, bool other_allowed) {
  const auto fp = iso_fingerprint(f);
  for (auto& c : classes) {
    if (c.representative.size() != f.size() || iso_fingerprint(c.representative) != fp) continue;
    if (!are_isomorphic(c.representative, f)) continue;
    c.count += count;
    if (f < c.representative) c.representative = f;
    return;
  }
  auto [label, allowed] = classify(f, refs, other_allowed);
  classes.push_back({label, f, count, allowed});
}

std::vector<EqualityClass> sorted_classes(std::vector<EqualityClass> classes) {
  std::sort(classes.begin(), classes.end(), [](const EqualityClass& a, const EqualityClass& b) {
    if (a.label != b.label) return a.label < b.label;
    return a.representative < b.representative;
  });
  return classes;
}

void merge_violations(VerificationReport& into, const VerificationReport& from) {
  const std::uint64_t total = into.counterexample_count + from.counterexample_count;
  for (const Family& f : from.counterexamples) into.add_counterexample(f);
  into.counterexample_count = total;
  if (total > 0) into.status = Status::Counterexample;
}

bool is_integral(double u) { return std::floor(u) == u; }

}  // namespace

// ---------------------------------------------------------------- SizeBoundCheck

SizeBoundCheck::SizeBoundCheck(std::string theorem, Json params, Scope scope, ExactCount bound,
                               std::vector<ClassReference> references, bool other_classes_allowed)
    : theorem_(std::move(theorem)), params_(std::move(params)), scope_(std::move(scope)),
      bound_(std::move(bound)), references_(std::move(references)),
      other_allowed_(other_classes_allowed) {}

void SizeBoundCheck::observe(const Family& f) {
  ++examined_;
  if (!scope_(f)) return;
  ++in_scope_;
  largest_in_scope_ = std::max(largest_in_scope_, f.size());
  const ExactCount size = f.size();
  if (size > bound_) {
    violations_.add_counterexample(f);
  } else if (size == bound_) {
    ++equality_cases_;
    add_to_class(classes_, f, 1, references_, other_allowed_);
    const auto [label, allowed] = classify(f, references_, other_allowed_);
    if (!allowed) violations_.add_counterexample(f);
  }
}

std::size_t SizeBoundCheck::size_floor() const {
  return bound_ < 0 ? 0 : bound_.convert_to<std::size_t>();
}

void SizeBoundCheck::merge(const TheoremCheck& other) {
  const auto& o = dynamic_cast<const SizeBoundCheck&>(other);
  examined_ += o.examined_;
  in_scope_ += o.in_scope_;
  equality_cases_ += o.equality_cases_;
  largest_in_scope_ = std::max(largest_in_scope_, o.largest_in_scope_);
  for (const auto& c : o.classes_) add_to_class(classes_, c.representative, c.count, references_, other_allowed_);
  merge_violations(violations_, o.violations_);
}

VerificationReport SizeBoundCheck::report() const {
  VerificationReport r;
  r.theorem = theorem_;
  r.params = params_;
  r.params["bound"] = bound_.str();
  merge_violations(r, violations_);
  r.equality_classes = sorted_classes(classes_);
  r.stats["families_examined"] = examined_;
  r.stats["families_in_scope"] = in_scope_;
  r.stats["largest_in_scope"] = largest_in_scope_;
  r.stats["equality_cases"] = equality_cases_;
  r.stats["isomorphism_classes"] = classes_.size();
  r.notes = notes_;
  return r;
}

// ---------------------------------------------------------------- factories

std::unique_ptr<SizeBoundCheck> make_ekr_check(Params params) {
  params.validate();
  params.require_kneser("ekr");
  Json jp;
  jp["n"] = params.n;
  jp["k"] = params.k;
  std::vector<ClassReference> refs{{"star", full_star(params, 1), true}};
  return std::make_unique<SizeBoundCheck>("ekr", std::move(jp), [](const Family& f) { return is_intersecting(f); },
                                          size_full_star(params.n, params.k), std::move(refs), false);
}

std::unique_ptr<SizeBoundCheck> make_thm1_check(Params params, double u) {
  params.validate();
  Json jp;
  jp["n"] = params.n;
  jp["k"] = params.k;
  jp["u"] = u;
  ExactCount bound;
  std::vector<ClassReference> refs;
  SizeBoundCheck::Scope scope;
  if (is_integral(u)) {
    const int ui = static_cast<int>(u);
    bound = kz_bound_exact(params.n, params.k, ui);
    const ExactCount threshold = kz_diversity_threshold_exact(params.n, params.k, ui);
    jp["diversity_threshold"] = threshold.str();
    refs.push_back({h_label(ui), h_u(params, ui), true});
    scope = [threshold](const Family& f) {
      return is_intersecting(f) && ExactCount(diversity(f).value) >= threshold;
    };
  } else {
    const RealBound b = kz_bound(params.n, params.k, u);
    bound = static_cast<std::int64_t>(std::floor(b.value + b.tolerance));
    const RealBound threshold = kz_diversity_threshold(params.n, params.k, u);
    jp["diversity_threshold"] = threshold.value;
    scope = [threshold](const Family& f) {
      return is_intersecting(f) &&
             static_cast<double>(diversity(f).value) + threshold.tolerance >= threshold.value;
    };
  }
  // Sharpness is claimed, uniqueness is not: every equality class is acceptable.
  return std::make_unique<SizeBoundCheck>("thm1", std::move(jp), std::move(scope), std::move(bound),
                                          std::move(refs), true);
}

std::unique_ptr<SizeBoundCheck> make_hk_check(Params params) {
  params.validate();
  Json jp;
  jp["n"] = params.n;
  jp["k"] = params.k;
  const ExactCount bound = hk_bound(params.n, params.k);
  std::vector<ClassReference> refs;
  refs.push_back({j_label(2), j_i(params, 2), true});
  refs.push_back({e_label(params.n - params.k), e_l(params, params.n - params.k), params.k == 4});
  for (int u = 2; u <= std::min(3, params.k); ++u) refs.push_back({h_label(u), h_u(params, u), false});
  auto check = std::make_unique<SizeBoundCheck>(
      "hk", std::move(jp),
      [](const Family& f) { return is_intersecting(f) && diversity(f).value >= 2; }, bound,
      std::move(refs), false);
  if (params.k == 4)
    check->add_note("k=4: equality classes checked against {J_2, E_" + std::to_string(params.n - 4) +
                    "} (theorem-4 k=4 clause)");
  return check;
}

std::unique_ptr<SizeBoundCheck> make_thm4_part2_check(Params params, int t) {
  params.validate();
  params.require_kneser("thm4p2");
  if (params.k < 4) throw RegimeError("thm4p2: requires k >= 4");
  if (t < 3 || t > params.k - 1) throw RegimeError("thm4p2: requires 3 <= t <= k-1");
  const int n = params.n, k = params.k;
  const int first = k - t + 1;
  Json jp;
  jp["n"] = n;
  jp["k"] = k;
  jp["t"] = t;
  const ExactCount bound = size_j_i(n, k, first);
  std::vector<ClassReference> refs;
  if (k == 4) {
    refs.push_back({j_label(2), j_i(params, 2), true});
    refs.push_back({e_label(n - k), e_l(params, n - k), true});
  } else {
    const bool chain = n < 3 * k - t;
    for (int i = first; i <= k && n >= k + i; ++i)
      refs.push_back({j_label(i), j_i(params, i), i == first || chain});
  }
  for (int u = 2; u <= 3; ++u) refs.push_back({h_label(u), h_u(params, u), false});
  auto scope = [t](const Family& f) {
    if (!is_intersecting(f)) return false;
    const Diversity d = diversity(f);
    if (d.value == 0) return false;
    for (int c = 1; c <= f.n(); ++c) {
      const Family bar = deletion(f, c);
      if (bar.size() == d.value && set_size(common_intersection(bar)) <= t) return true;
    }
    return false;
  };
  auto check = std::make_unique<SizeBoundCheck>("thm4p2", std::move(jp), scope, bound, std::move(refs), false);
  check->add_note("labels normalized: any diversity minimizer c plays the role of element 1");
  return check;
}

bool inside_some_e_l(const Family& f) {
  for (int c = 1; c <= f.n(); ++c) {
    const Family bar = deletion(f, c);
    if (bar.size() <= 1) return true;
    if (set_size(common_intersection(bar)) == f.k() - 1) return true;
  }
  return false;
}

std::unique_ptr<SizeBoundCheck> make_cor5_check(Params params) {
  params.validate();
  params.require_kneser("cor5");
  if (params.k < 4) throw RegimeError("cor5: requires k >= 4");
  const int n = params.n, k = params.k;
  Json jp;
  jp["n"] = n;
  jp["k"] = k;
  const ExactCount bound = size_j_i(n, k, 3);
  std::vector<ClassReference> refs;
  for (int i = 3; i <= k && n >= k + i; ++i) refs.push_back({j_label(i), j_i(params, i), i == 3 || n == 2 * k + 1});
  for (int u = 2; u <= 3; ++u) refs.push_back({h_label(u), h_u(params, u), false});
  auto check = std::make_unique<SizeBoundCheck>(
      k >= 5 ? "cor5" : "cor5-theorem-4-derived", std::move(jp),
      [](const Family& f) { return is_intersecting(f) && !inside_some_e_l(f); }, bound, std::move(refs),
      false);
  if (k == 4) check->add_note("k=4 lies outside 2k >= 10; this run is the theorem-4-derived analogue");
  check->add_note("E_l containment for l in {0,1} read as |F(bar c)| <= 1 for some c");
  return check;
}

// ---------------------------------------------------------------- extension of minimal subfamilies

std::size_t thm4_part1_floor(Params params, int t) {
  const int n = params.n, k = params.k;
  const int m = n - 1 - t, s = k - t;
  std::size_t best = 0;
  bool any = false;
  enumerate_minimal_tau2(m, s, [&](const Family& h) {
    const std::size_t v = h.size() + max_cross_partner(h, k - 1).size();
    if (!any || v < best) best = v;
    any = true;
    return true;
  });
  const ExactCount base = binom_exact(n - 1, k - 1) - binom_exact(n - 1 - t, k - 1);
  return base.convert_to<std::size_t>() + best;
}

Thm4Part1Check::Thm4Part1Check(Params params, int t) : params_(params), t_(t) {
  params.validate();
  params.require_kneser("thm4p1");
  if (params.k < 4) throw RegimeError("thm4p1: requires k >= 4");
  if (t < 3 || t > params.k - 1) throw RegimeError("thm4p1: requires 3 <= t <= k-1");
  floor_ = thm4_part1_floor(params, t);
  if (params.k == 4) {
    references_.push_back({e_label(params.n - 4), e_l(params, params.n - 4), true});
    references_.push_back({j_label(2), j_i(params, 2), true});
  }
  for (int u = 2; u <= 3; ++u) references_.push_back({h_label(u), h_u(params, u), false});
}

void Thm4Part1Check::observe(const Family& f) {
  ++examined_;
  if (!is_intersecting(f)) return;
  const Diversity d = diversity(f);
  const int k = params_.k;
  bool violated = false, equal = false, equal_allowed = true;

  for (int c = 1; c <= f.n(); ++c) {
    if (deletion(f, c).size() != d.value) continue;
    Permutation p = identity_permutation(f.n());
    std::swap(p[0], p[c - 1]);
    const Family g = c == 1 ? f : apply_permutation(p, f);
    const Family bar = deletion(g, 1);
    const auto sets = bar.sets();
    std::vector<SetWord> chosen;
    // Subfamilies of size 2..k-t+1 whose common intersection has size t and is minimal.
    std::function<void(std::size_t, SetWord)> pick = [&](std::size_t from, SetWord common) {
      for (std::size_t i = from; i < sets.size(); ++i) {
        const SetWord next = common & sets[i];
        if (set_size(next) < t_) continue;
        chosen.push_back(sets[i]);
        if (chosen.size() >= 2 && set_size(next) == t_) {
          const Family m = Family::from_sorted_unchecked(params_, chosen);
          if (minimality_witness(m)) {
            ++pairs_checked_;
            const Family ext = maximal_extension(m);
            if (g.size() > ext.size()) {
              violated = true;
            } else if (g.size() == ext.size()) {
              equal = true;
              bool ok = true;
              if (k >= 5) ok = are_isomorphic(g, ext).has_value();
              else if (k == 4 && t_ == 3) ok = classify(g, references_, false).second;
              equal_allowed = equal_allowed && ok;
            }
          }
        }
        if (static_cast<int>(chosen.size()) < k - t_ + 1) pick(i + 1, next);
        chosen.pop_back();
      }
    };
    pick(0, ground(f.n()));
  }

  if (equal) {
    ++equality_cases_;
    add_to_class(classes_, f, 1, references_, k >= 5 ? equal_allowed : false);
  }
  if (violated || (equal && !equal_allowed)) violations_.add_counterexample(f);
}

void Thm4Part1Check::merge(const TheoremCheck& other) {
  const auto& o = dynamic_cast<const Thm4Part1Check&>(other);
  examined_ += o.examined_;
  pairs_checked_ += o.pairs_checked_;
  equality_cases_ += o.equality_cases_;
  for (const auto& c : o.classes_) add_to_class(classes_, c.representative, c.count, references_, c.allowed);
  merge_violations(violations_, o.violations_);
}

VerificationReport Thm4Part1Check::report() const {
  VerificationReport r;
  r.theorem = "thm4p1";
  r.params["n"] = params_.n;
  r.params["k"] = params_.k;
  r.params["t"] = t_;
  r.params["size_floor"] = floor_;
  merge_violations(r, violations_);
  r.equality_classes = sorted_classes(classes_);
  r.stats["families_examined"] = examined_;
  r.stats["minimal_subfamilies_checked"] = pairs_checked_;
  r.stats["equality_cases"] = equality_cases_;
  r.stats["isomorphism_classes"] = classes_.size();
  r.notes.push_back("every diversity minimizer c is moved to element 1 in turn");
  return r;
}

VerificationReport verify_thm4_part1(const Family& f, const Family& m_sub) {
  VerificationReport r;
  r.theorem = "thm4p1";
  r.params["n"] = f.n();
  r.params["k"] = f.k();
  auto precondition = [&](bool ok, const std::string& why) {
    if (!ok) r.mark_inconclusive("precondition failed: " + why);
    return ok;
  };
  if (!precondition(f.n() > 2 * f.k() && f.k() >= 4, "n > 2k >= 8")) return r;
  if (!precondition(m_sub.params() == f.params(), "M has the parameters of F")) return r;
  if (!precondition(is_intersecting(f), "F is intersecting")) return r;
  const Family bar = deletion(f, 1);
  if (!precondition(diversity(f).value == bar.size(), "diversity attained at element 1")) return r;
  if (!precondition(bar.includes(m_sub), "M is a subfamily of F(bar 1)")) return r;
  const MinimalityResult w = minimality_witness(m_sub);
  if (!precondition(w.witness.has_value(), "M is minimal w.r.t. common intersection")) return r;
  const int t = set_size(w.witness->core);
  r.params["t"] = t;
  if (!precondition(t >= 3, "t >= 3")) return r;

  const Family ext = maximal_extension(m_sub);
  r.stats["size"] = f.size();
  r.stats["extension_size"] = ext.size();
  if (f.size() > ext.size()) {
    r.add_counterexample(f);
  } else if (f.size() == ext.size()) {
    bool ok = true;
    std::string label = "F'";
    if (f.k() >= 5) {
      ok = are_isomorphic(f, ext).has_value();
      if (!ok) label = "other";
    } else if (f.k() == 4 && t == 3) {
      std::vector<ClassReference> refs{{e_label(f.n() - 4), e_l(f.params(), f.n() - 4), true},
                                       {j_label(2), j_i(f.params(), 2), true}};
      auto cls = classify(f, refs, false);
      ok = cls.second;
      label = cls.first;
    }
    r.equality_classes.push_back({label, f, 1, ok});
    if (!ok) r.add_counterexample(f);
  }
  return r;
}

// ---------------------------------------------------------------- list folds

namespace {
VerificationReport fold(TheoremCheck& check, std::span<const Family> families) {
  for (const Family& f : families) check.observe(f);
  return check.report();
}
}  // namespace

VerificationReport verify_thm1(Params params, double u, std::span<const Family> families) {
  return fold(*make_thm1_check(params, u), families);
}
VerificationReport verify_hk(Params params, std::span<const Family> families) {
  return fold(*make_hk_check(params), families);
}
VerificationReport verify_thm4_part2(Params params, int t, std::span<const Family> families) {
  return fold(*make_thm4_part2_check(params, t), families);
}
VerificationReport verify_cor5(Params params, std::span<const Family> families) {
  return fold(*make_cor5_check(params), families);
}

// ---------------------------------------------------------------- runners

std::vector<VerificationReport> run_exhaustive(std::span<TheoremCheck* const> checks, Params params,
                                               const EnumBudget& budget, EnumOptions options) {
  std::size_t floor = 0;
  for (std::size_t i = 0; i < checks.size(); ++i)
    floor = i == 0 ? checks[i]->size_floor() : std::min(floor, checks[i]->size_floor());
  options.min_size = std::max(options.min_size, floor);
  const EnumOutcome out = enumerate_maximal_intersecting(params, budget, options, [&](const Family& f) {
    for (TheoremCheck* c : checks)
      if (f.size() >= c->size_floor()) c->observe(f);
    return true;
  });
  std::vector<VerificationReport> reports;
  for (TheoremCheck* c : checks) {
    VerificationReport r = c->report();
    r.stats["source"] = "exhaustive";
    r.stats["clique_nodes"] = out.nodes;
    r.stats["maximal_families_enumerated"] = out.emitted;
    r.budget["max_nodes"] = budget.max_nodes;
    r.budget["max_millis"] = budget.max_millis;
    r.budget["max_families"] = budget.max_families;
    r.budget["size_floor"] = std::max(options.min_size, c->size_floor());
    r.budget["exhausted"] = out.status == EnumStatus::Inconclusive;
    if (out.status == EnumStatus::Inconclusive)
      r.mark_inconclusive("enumeration stopped early (" + out.stop_reason + ")");
    reports.push_back(std::move(r));
  }
  return reports;
}

VerificationReport run_exhaustive(TheoremCheck& check, Params params, const EnumBudget& budget,
                                  EnumOptions options) {
  TheoremCheck* one[] = {&check};
  return std::move(run_exhaustive(std::span<TheoremCheck* const>(one), params, budget, options).front());
}

VerificationReport run_sampled(TheoremCheck& check, Params params, std::uint64_t samples,
                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uint64_t failures = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const std::uint64_t s = rng();
    const std::size_t target = i % 8;
    if (auto f = random_intersecting(params, target, s))
      check.observe(*f);
    else
      ++failures;
  }
  VerificationReport r = check.report();
  r.stats["source"] = "sampled";
  r.stats["sampler_failures"] = failures;
  r.budget["samples"] = samples;
  r.budget["seed"] = seed;
  r.notes.push_back("sampled stream: verdict covers the sampled families only");
  return r;
}

// ---------------------------------------------------------------- minimal tau=2 families

VerificationReport verify_lemma7(int m, int s, int k) {
  if (!(k >= 4 && m >= k + s && m > 2 * s && s >= 1))
    throw RegimeError("lemma7: requires k >= 4, m >= k + s, m > 2s");
  VerificationReport r;
  r.theorem = "lemma7";
  r.params["m"] = m;
  r.params["s"] = s;
  r.params["k"] = k;

  const Family reference = t2s(m, s);
  const ExactCount expected = f2s_size(m, k, s) + 2;
  std::size_t best = 0;
  std::vector<Family> argmax;
  std::map<std::size_t, std::uint64_t> by_size;
  std::uint64_t families = 0, cap_violations = 0, ladder_violations = 0;

  // One past the cap, so a family breaking |H| <= s+1 would be seen.
  enumerate_minimal_tau2(
      m, s,
      [&](const Family& h) {
        ++families;
        ++by_size[h.size()];
        const std::size_t z = h.size();
        const std::size_t partner = max_cross_partner(h, k - 1).size();
        if (z > static_cast<std::size_t>(s) + 1) {
          ++cap_violations;
          r.add_counterexample(h);
        } else if (ExactCount(partner) > f_of_z(m, k, s, static_cast<int>(z))) {
          ++ladder_violations;
          r.add_counterexample(h);
        }
        const std::size_t total = partner + z;
        if (total > best) {
          best = total;
          argmax.clear();
        }
        if (total == best) argmax.push_back(h);
        return true;
      },
      s + 2);

  std::uint64_t reference_copies = 0;
  for (const Family& h : argmax) {
    if (are_isomorphic(reference, h))
      ++reference_copies;
    else
      r.add_counterexample(h);
  }
  if (ExactCount(best) != expected) {
    r.notes.push_back("maximum " + std::to_string(best) + " differs from f2s_size + 2 = " + expected.str());
    for (const Family& h : argmax) r.add_counterexample(h);
  }

  r.stats["families"] = families;
  Json sizes = Json::object();
  for (auto [z, c] : by_size) sizes[std::to_string(z)] = c;
  r.stats["families_by_size"] = std::move(sizes);
  r.stats["max_total"] = best;
  r.stats["expected_max"] = expected.str();
  r.stats["argmax_count"] = argmax.size();
  r.stats["argmax_t2s_copies"] = reference_copies;
  r.stats["bollobas_cap_violations"] = cap_violations;
  r.stats["ladder_violations"] = ladder_violations;
  r.stats["families_examined"] = families;
  return r;
}

// ---------------------------------------------------------------- cross-intersecting

CrossCheck check_cross_pair(int n, int a, int b, std::size_t b_size, std::size_t a_size) {
  CrossCheck c;
  const ExactCount bs = b_size;
  const ExactCount total = ExactCount(a_size) + bs;
  if (cross_easy_applies(n, a, b, bs)) {
    c.easy_applies = true;
    const ExactCount bound = cross_easy_bound(n, a, b);
    c.easy_tight = total == bound;
    c.easy_ok = total <= bound && (b_size == 0 || total < bound);
  }
  if (b < a) {
    for (int j = 1; j <= b; ++j) {
      const ExactCount threshold = cross_j_threshold(n, b, j);
      if (bs < threshold) continue;
      c.j_applied.push_back(j);
      const ExactCount bound = cross_j_bound(n, a, b, j);
      if (total > bound) c.j_ok = false;
      if (total == bound) {
        c.j_tight = true;
        const bool exception = b == a - 1 && j == 1 && bs == binom_exact(n, b);
        if (bs > threshold && !exception) c.j_ok = false;
      }
    }
  }
  return c;
}

VerificationReport verify_cross(int n, int a, int b, std::uint64_t samples, std::uint64_t seed) {
  if (!(a > 0 && b > 0 && n > a + b)) throw RegimeError("cross: requires a, b > 0 and n > a + b");
  VerificationReport r;
  r.theorem = "cross";
  r.params["n"] = n;
  r.params["a"] = a;
  r.params["b"] = b;

  std::vector<SetWord> all_b;
  for_each_subset(ground(n), b, [&](SetWord s) { all_b.push_back(s); });
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::uint64_t easy_applied = 0, easy_tight = 0, j_applied = 0, j_tight = 0;
  std::map<int, std::uint64_t> per_j;

  auto sample = [&](std::uint64_t i) {
    std::vector<SetWord> chosen;
    if (i == 0) return chosen;
    if (i == 1) return all_b;
    switch (i % 4) {
      case 0: {  // independent inclusion at a random density
        const double p = unit(rng);
        for (SetWord s : all_b)
          if (unit(rng) < p) chosen.push_back(s);
        break;
      }
      case 1: {  // a j-star, lightly perturbed
        const int j = std::uniform_int_distribution<int>(1, b)(rng);
        std::vector<int> el = identity_permutation(n);
        std::shuffle(el.begin(), el.end(), rng);
        SetWord core = 0;
        for (int q = 0; q < j; ++q) core |= element_bit(el[q]);
        const double drop = unit(rng) < 0.5 ? 0.0 : 0.1 * unit(rng);
        const double add = unit(rng) < 0.5 ? 0.0 : 0.05 * unit(rng);
        for (SetWord s : all_b) {
          const bool in = subset_of(core, s);
          if ((in && unit(rng) >= drop) || (!in && unit(rng) < add)) chosen.push_back(s);
        }
        break;
      }
      case 2: {  // a handful of sets
        const int count = std::uniform_int_distribution<int>(1, 4)(rng);
        for (int q = 0; q < count; ++q)
          chosen.push_back(all_b[std::uniform_int_distribution<std::size_t>(0, all_b.size() - 1)(rng)]);
        break;
      }
      default: {  // nearly everything
        const double p = 0.9 + 0.1 * unit(rng);
        for (SetWord s : all_b)
          if (unit(rng) < p) chosen.push_back(s);
        break;
      }
    }
    return chosen;
  };

  for (std::uint64_t i = 0; i < samples; ++i) {
    const Family bf = Family::from_masks({n, b}, sample(i));
    const std::size_t a_size = max_cross_partner(bf, a).size();
    const CrossCheck c = check_cross_pair(n, a, b, bf.size(), a_size);
    easy_applied += c.easy_applies;
    easy_tight += c.easy_applies && c.easy_tight;
    j_applied += !c.j_applied.empty();
    j_tight += c.j_tight;
    for (int j : c.j_applied) ++per_j[j];
    if (!c.easy_ok || !c.j_ok) r.add_counterexample(bf);
  }

  r.stats["samples"] = samples;
  r.stats["families_examined"] = samples;
  r.stats["easy_bound_applied"] = easy_applied;
  r.stats["easy_bound_tight"] = easy_tight;
  r.stats["j_bound_applied"] = j_applied;
  r.stats["j_bound_tight"] = j_tight;
  Json pj = Json::object();
  for (auto [j, c] : per_j) pj[std::to_string(j)] = c;
  r.stats["j_bound_applied_by_j"] = std::move(pj);
  r.budget["samples"] = samples;
  r.budget["seed"] = seed;
  return r;
}

}  // namespace extremal
