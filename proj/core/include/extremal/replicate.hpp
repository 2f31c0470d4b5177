#pragma once

#include <string>
#include <vector>

#include "extremal/enumeration.hpp"
#include "extremal/report.hpp"

namespace extremal {

struct ReplicateOptions {
  // Budget for each exhaustive (9,4) run.
  EnumBudget budget{0, 600000, 10000000, 0};
  std::uint64_t seed = 1;
  std::uint64_t cross_samples = 10000;
  unsigned threads = 1;
};

// formulas, hm-kz, hk, thm4, lemma7, cross, chains
const std::vector<std::string>& replicate_suites();

// Runs one named suite; throws std::invalid_argument for unknown names.
AggregateReport replicate(const std::string& suite, const ReplicateOptions& options = {});

// Individual suites, also used by the acceptance tests.
AggregateReport replicate_formulas();
AggregateReport replicate_anchors();
AggregateReport replicate_chains(int k_min = 4, int k_max = 8, int n_max = 40);
AggregateReport replicate_hm_kz(const ReplicateOptions& options);
AggregateReport replicate_hk(const ReplicateOptions& options);
AggregateReport replicate_thm4(const ReplicateOptions& options);
AggregateReport replicate_lemma7();
AggregateReport replicate_cross(const ReplicateOptions& options);

}  // namespace extremal
