// Runs acceptance criteria 1-8 and prints one PASS/FAIL line per criterion.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "extremal/constructions.hpp"
#include "extremal/isomorphism.hpp"
#include "extremal/replicate.hpp"
#include "extremal/verification.hpp"
#include "property_suites.hpp"

using namespace extremal;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string describe_items(const AggregateReport& agg) {
  std::ostringstream os;
  os << agg.items.size() << " items, status " << to_string(agg.status);
  for (const auto& r : agg.items)
    if (r.status != Status::Verified) {
      os << "; " << r.theorem << " " << r.params.dump() << " " << to_string(r.status);
      if (!r.notes.empty()) os << " (" << r.notes.front() << ")";
    }
  return os.str();
}

Outcome all_verified(const AggregateReport& agg) { return {agg.status == Status::Verified, describe_items(agg)}; }

Outcome criterion5() {
  std::ostringstream os;
  bool pass = true;
  auto small = [&](VerificationReport r, const std::string& what) {
    os << what << "=" << to_string(r.status) << "; ";
    pass = pass && r.status == Status::Verified;
  };
  small(run_exhaustive(*make_ekr_check({5, 2}), {5, 2}, {}), "ekr(5,2)");
  small(run_exhaustive(*make_ekr_check({7, 3}), {7, 3}, {}), "ekr(7,3)");
  small(run_exhaustive(*make_thm1_check({7, 3}, 3), {7, 3}, {}), "thm1(7,3,u=3)");

  // Declared budget: 10 minutes and 3e8 clique nodes, enough for a complete census at (9,4).
  const Params p{9, 4};
  const EnumBudget budget{0, 600000, 300000000, 0};
  os << "(9,4) budget 600000 ms / 300000000 nodes: ";
  auto hk = make_hk_check(p);
  auto part2 = make_thm4_part2_check(p, 3);
  TheoremCheck* checks[] = {hk.get(), part2.get()};
  const auto reports = run_exhaustive(std::span<TheoremCheck* const>(checks), p, budget);
  const Family j2 = j_i(p, 2), e5 = e_l(p, 5);
  for (const auto& r : reports) {
    os << r.theorem << "=" << to_string(r.status) << " [nodes " << r.stats["clique_nodes"].dump() << ", classes";
    if (r.status == Status::Counterexample) pass = false;
    for (const auto& c : r.equality_classes) {
      os << " " << c.label << "x" << c.count;
      const bool named = are_isomorphic(c.representative, j2) || are_isomorphic(c.representative, e5);
      if (!named) {
        pass = false;
        os << "(not J_2/E_5)";
      }
    }
    os << "]; ";
  }
  return {pass, os.str()};
}

Outcome criterion7() {
  const props::SuiteResult suites[] = {
      props::shift_preservation(1000, 701), props::shadow_containment(1000, 702),
      props::kruskal_katona(1000, 703, 1e-6), props::link_delete_partition(1000, 704),
      props::isomorphism_invariance(1000, 705)};
  Outcome o{true, ""};
  for (const auto& s : suites) {
    o.pass = o.pass && s.ok() && s.cases == 1000;
    o.detail += s.name + " " + std::to_string(s.cases - s.failures) + "/" + std::to_string(s.cases);
    if (!s.ok()) o.detail += " (" + s.first_failure + ")";
    o.detail += "; ";
  }
  return o;
}

Outcome criterion8() {
  const bool a = are_isomorphic(j_i({9, 4}, 2), e_l({9, 4}, 2)).has_value();
  const bool b = are_isomorphic(j_i({11, 5}, 2), e_l({11, 5}, 2)).has_value();
  const bool c = !are_isomorphic(j_i({10, 4}, 2), j_i({10, 4}, 3)).has_value();
  std::string d = std::string("J_2~E_2 at (9,4): ") + (a ? "yes" : "no") + "; J_2~E_2 at (11,5): " +
                  (b ? "yes" : "no") + "; J_2~J_3 at (10,4) refuted: " + (c ? "yes" : "no");
  return {a && b && c, d};
}

}  // namespace

int main() {
  ReplicateOptions cross;
  cross.seed = 20240601;
  cross.cross_samples = 10000;

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"formula/enumeration identities", [] { return all_verified(replicate_formulas()); }},
      {"anchored values", [] { return all_verified(replicate_anchors()); }},
      {"J-chain differences and regimes", [] { return all_verified(replicate_chains(4, 8, 40)); }},
      {"minimal tau=2 families, exhaustive", [] { return all_verified(replicate_lemma7()); }},
      {"exhaustive theorem runs", criterion5},
      {"cross-intersecting randomized suite", [&] { return all_verified(replicate_cross(cross)); }},
      {"property suites", criterion7},
      {"named isomorphisms", criterion8},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::printf("criterion %zu: %s - %s (%.1f s) :: %s\n", i + 1, o.pass ? "PASS" : "FAIL",
                criteria[i].first.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
