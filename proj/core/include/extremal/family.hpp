#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "extremal/setword.hpp"

namespace extremal {

// Raised for malformed input: elements out of range, wrong cardinality,
// ground set too large, mismatched families.
class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Params {
  int n = 0;
  int k = 0;

  // 0 <= k <= n <= 64. Uniformity 0 only arises from links of 1-uniform families.
  void validate() const;
  // n > 2k
  bool kneser_regime() const { return n > 2 * k; }
  // Throws std::domain_error naming `what` when n <= 2k.
  void require_kneser(const char* what) const;

  friend bool operator==(const Params&, const Params&) = default;
};

// A uniform family over [n], stored in strictly increasing mask order.
class Family {
 public:
  Family() = default;

  // Validates, sorts and deduplicates.
  static Family from_masks(Params params, std::vector<SetWord> sets);
  // Trusts the caller: sets must already be sorted, unique, and k-uniform.
  static Family from_sorted_unchecked(Params params, std::vector<SetWord> sets);

  const Params& params() const { return params_; }
  int n() const { return params_.n; }
  int k() const { return params_.k; }

  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  std::span<const SetWord> sets() const { return sets_; }
  SetWord operator[](std::size_t i) const { return sets_[i]; }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }

  bool contains(SetWord a) const;
  // Subfamily test; false when n or k differ.
  bool includes(const Family& other) const;

  friend bool operator==(const Family&, const Family&) = default;
  // Canonical order on families: by (n, k), then lexicographic on the sorted masks.
  friend std::strong_ordering operator<=>(const Family& a, const Family& b);

 private:
  Family(Params params, std::vector<SetWord> sets) : params_(params), sets_(std::move(sets)) {}

  Params params_;
  std::vector<SetWord> sets_;
};

// Builds a family from 1-based element lists.
Family make_family(Params params, const std::vector<std::vector<int>>& sets);

// Every k-subset of [n].
Family complete_family(Params params);

// Family with sets listed as 1-based element lists, for diagnostics.
std::string describe(const Family& f);

}  // namespace extremal
