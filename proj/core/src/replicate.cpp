#include "extremal/replicate.hpp"

#include <stdexcept>

#include "extremal/bounds.hpp"
#include "extremal/constructions.hpp"
#include "extremal/operations.hpp"
#include "extremal/verification.hpp"

namespace extremal {

namespace {

// Compares a closed form with a counted value, recording a failure on mismatch.
void expect_equal(VerificationReport& r, std::uint64_t& checked, const std::string& what,
                  const ExactCount& formula, const ExactCount& counted) {
  ++checked;
  if (formula != counted)
    r.add_failure(what + ": formula " + formula.str() + " != counted " + counted.str());
}

void expect_family(VerificationReport& r, std::uint64_t& checked, const std::string& what,
                   const ExactCount& formula, const Family& f) {
  if (!is_intersecting(f)) r.add_failure(what + ": generated family is not intersecting");
  expect_equal(r, checked, what, formula, ExactCount(f.size()));
}

std::string point(int n, int k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

EnumOptions enum_options(const ReplicateOptions& o) {
  EnumOptions e;
  e.threads = o.threads;
  return e;
}

}  // namespace

const std::vector<std::string>& replicate_suites() {
  static const std::vector<std::string> names{"formulas", "hm-kz", "hk", "thm4", "lemma7", "cross", "chains"};
  return names;
}

AggregateReport replicate_formulas() {
  AggregateReport agg;
  agg.suite = "formulas";
  for (int k = 4; k <= 5; ++k) {
    for (int n = 2 * k + 1; n <= 12; ++n) {
      const Params p{n, k};
      VerificationReport r;
      r.theorem = "formulas";
      r.params["n"] = n;
      r.params["k"] = k;
      std::uint64_t checked = 0;
      const std::string at = point(n, k);
      expect_family(r, checked, "size_full_star" + at, size_full_star(n, k), full_star(p, 1));
      for (int u = 2; u <= k; ++u) {
        const Family h = h_u(p, u);
        const std::string tag = at + " u=" + std::to_string(u);
        expect_family(r, checked, "size_h_u" + tag, size_h_u(n, k, u), h);
        if (u >= 3) expect_equal(r, checked, "kz_bound" + tag, kz_bound_exact(n, k, u), h.size());
      }
      for (int i = 1; i <= k && n >= k + i; ++i) {
        const Family j = j_i(p, i);
        const std::string tag = at + " i=" + std::to_string(i);
        expect_family(r, checked, "size_j_i" + tag, size_j_i(n, k, i), j);
        if (i == 1) expect_equal(r, checked, "hm_bound" + tag, hm_bound(n, k), j.size());
        if (i == 2) expect_equal(r, checked, "hk_bound" + tag, hk_bound(n, k), j.size());
      }
      expect_equal(r, checked, "hm_bound" + at + " vs H_k", hm_bound(n, k), h_u(p, k).size());
      for (int l = 2; l <= n - k; ++l)
        expect_family(r, checked, "size_e_l" + at + " l=" + std::to_string(l), size_e_l(n, k, l), e_l(p, l));
      r.stats["identities_checked"] = checked;
      r.stats["families_examined"] = checked;
      agg.add(std::move(r));
    }
  }
  // f2s over [m] for m <= 12.
  for (int k = 4; k <= 5; ++k) {
    VerificationReport r;
    r.theorem = "formulas-f2s";
    r.params["k"] = k;
    std::uint64_t checked = 0;
    for (int m = k + 1; m <= 12; ++m)
      for (int s = 1; m >= k + s && m >= 2 * s; ++s)
        expect_equal(r, checked,
                     "f2s_size(" + std::to_string(m) + "," + std::to_string(k) + "," + std::to_string(s) + ")",
                     f2s_size(m, k, s), f2s(m, k, s).size());
    r.stats["identities_checked"] = checked;
    r.stats["families_examined"] = checked;
    agg.add(std::move(r));
  }
  return agg;
}

AggregateReport replicate_anchors() {
  AggregateReport agg;
  agg.suite = "anchors";
  VerificationReport r;
  r.theorem = "anchors";
  std::uint64_t checked = 0;
  const Params p{9, 4};
  expect_equal(r, checked, "hk_bound(9,4)", hk_bound(9, 4), 51);
  expect_equal(r, checked, "hm_bound(9,4)", hm_bound(9, 4), 53);
  expect_equal(r, checked, "size_j_i(9,4,3)", size_j_i(9, 4, 3), 50);
  expect_equal(r, checked, "size_e_l(9,4,5)", size_e_l(9, 4, 5), 51);
  expect_equal(r, checked, "f2s_size(8,4,3)", f2s_size(8, 4, 3), 36);
  expect_equal(r, checked, "f_of_z(8,4,3,3)", f_of_z(8, 4, 3, 3), 31);
  expect_equal(r, checked, "|J_2| at (9,4)", j_i(p, 2).size(), 51);
  expect_equal(r, checked, "|H_4| at (9,4)", h_u(p, 4).size(), 53);
  expect_equal(r, checked, "|J_3| at (9,4)", j_i(p, 3).size(), 50);
  expect_equal(r, checked, "|E_5| at (9,4)", e_l(p, 5).size(), 51);
  expect_equal(r, checked, "|F_2^3| at m=8, k=4", f2s(8, 4, 3).size(), 36);
  r.stats["identities_checked"] = checked;
  agg.add(std::move(r));
  return agg;
}

AggregateReport replicate_chains(int k_min, int k_max, int n_max) {
  AggregateReport agg;
  agg.suite = "chains";
  for (int k = k_min; k <= k_max; ++k) {
    VerificationReport r;
    r.theorem = "j-chain";
    r.params["k"] = k;
    r.params["n_min"] = 2 * k;
    r.params["n_max"] = n_max;
    Json table = Json::array();
    std::uint64_t checked = 0;
    for (int n = 2 * k; n <= n_max; ++n) {
      Json row;
      row["n"] = n;
      Json diffs = Json::array();
      for (int i = 1; i <= k - 1; ++i) {
        const ExactCount d = size_j_i(n, k, i) - size_j_i(n, k, i + 1);
        const ExactCount expected =
            i == 1 ? binom_exact(n - k - 2, k - 2) - 1 : binom_exact(n - k - i - 1, k - 2);
        const bool strict = i == 1 ? n >= 2 * k + 1 : n >= 2 * k + i - 1;
        const std::string tag = "|J_" + std::to_string(i) + "|-|J_" + std::to_string(i + 1) + "| at " + point(n, k);
        expect_equal(r, checked, tag, expected, d);
        if (d < 0) r.add_failure(tag + " is negative");
        if ((d > 0) != strict) r.add_failure(tag + ": strictness differs from the stated regime");
        diffs.push_back(d.str());
      }
      row["differences"] = std::move(diffs);
      table.push_back(std::move(row));
    }
    r.stats["identities_checked"] = checked;
    r.stats["table"] = std::move(table);
    agg.add(std::move(r));
  }
  return agg;
}

AggregateReport replicate_hm_kz(const ReplicateOptions& o) {
  AggregateReport agg;
  agg.suite = "hm-kz";
  const EnumBudget unlimited{};
  for (Params p : {Params{5, 2}, Params{7, 3}}) agg.add(run_exhaustive(*make_ekr_check(p), p, unlimited, enum_options(o)));
  agg.add(run_exhaustive(*make_thm1_check({7, 3}, 3), {7, 3}, unlimited, enum_options(o)));
  for (int u = 3; u <= 4; ++u) agg.add(run_exhaustive(*make_thm1_check({9, 4}, u), {9, 4}, o.budget, enum_options(o)));
  return agg;
}

AggregateReport replicate_hk(const ReplicateOptions& o) {
  AggregateReport agg;
  agg.suite = "hk";
  agg.add(run_exhaustive(*make_hk_check({9, 4}), {9, 4}, o.budget, enum_options(o)));
  return agg;
}

AggregateReport replicate_thm4(const ReplicateOptions& o) {
  AggregateReport agg;
  agg.suite = "thm4";
  const Params p{9, 4};
  auto part2 = make_thm4_part2_check(p, 3);
  Thm4Part1Check part1(p, 3);
  auto cor5 = make_cor5_check(p);
  TheoremCheck* checks[] = {part2.get(), &part1, cor5.get()};
  for (auto& r : run_exhaustive(std::span<TheoremCheck* const>(checks), p, o.budget, enum_options(o)))
    agg.add(std::move(r));
  return agg;
}

AggregateReport replicate_lemma7() {
  AggregateReport agg;
  agg.suite = "lemma7";
  agg.add(verify_lemma7(8, 3, 4));
  agg.add(verify_lemma7(9, 3, 5));
  return agg;
}

AggregateReport replicate_cross(const ReplicateOptions& o) {
  AggregateReport agg;
  agg.suite = "cross";
  const int triples[][3] = {{9, 4, 3}, {9, 3, 3}, {10, 4, 2}};
  for (const auto& t : triples) agg.add(verify_cross(t[0], t[1], t[2], o.cross_samples, o.seed));
  return agg;
}

AggregateReport replicate(const std::string& suite, const ReplicateOptions& options) {
  if (suite == "formulas") {
    AggregateReport agg = replicate_formulas();
    for (auto& r : replicate_anchors().items) agg.add(std::move(r));
    return agg;
  }
  if (suite == "hm-kz") return replicate_hm_kz(options);
  if (suite == "hk") return replicate_hk(options);
  if (suite == "thm4") return replicate_thm4(options);
  if (suite == "lemma7") return replicate_lemma7();
  if (suite == "cross") return replicate_cross(options);
  if (suite == "chains") return replicate_chains();
  throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace extremal
