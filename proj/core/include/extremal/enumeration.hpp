#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "extremal/family.hpp"

namespace extremal {

// Zero means "no limit" for every cap.
struct EnumBudget {
  std::uint64_t max_families = 0;
  std::int64_t max_millis = 0;
  std::uint64_t max_nodes = 0;
  std::uint64_t seed = 0;
};

enum class PivotRule {
  MaxDegree,  // Tomita: pivot maximizing |P ∩ N(u)|
  First,      // lowest-index vertex of P ∪ X
};

struct EnumOptions {
  // Maximal families with fewer members are neither reported nor searched for.
  std::size_t min_size = 0;
  // Report one family per isomorphism class (the first one reached).
  bool dedup_isomorphic = false;
  PivotRule pivot = PivotRule::MaxDegree;
  // Top-level branches are split across threads; output order is unchanged.
  unsigned threads = 1;
};

enum class EnumStatus { Complete, Inconclusive };

struct EnumOutcome {
  EnumStatus status = EnumStatus::Complete;
  std::string stop_reason;  // empty when complete
  std::uint64_t nodes = 0;
  std::uint64_t emitted = 0;
};

// Returning false stops the enumeration (the outcome is then inconclusive).
using FamilySink = std::function<bool(const Family&)>;

// Every inclusion-maximal intersecting family in C([n], k), each once, as the
// maximal cliques of the "sets intersect" graph on C([n], k) in canonical order.
// Requires n > 2k.
EnumOutcome enumerate_maximal_intersecting(Params params, const EnumBudget& budget,
                                           const EnumOptions& options, const FamilySink& sink);

// Families H ⊆ C([m], s) with covering number 2 all of whose proper
// subfamilies have covering number at most 1, with |H| <= member_cap
// (default s + 1). Emitted in lexicographic order of their sorted members.
// Requires m > 2s. Returns the number emitted.
std::uint64_t enumerate_minimal_tau2(int m, int s, const FamilySink& sink, int member_cap = 0);

}  // namespace extremal
