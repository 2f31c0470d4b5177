#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "extremal/family.hpp"
#include "extremal/family_json.hpp"

namespace extremal {

enum class Status { Verified, Counterexample, Inconclusive };

std::string to_string(Status s);
// 0 verified, 1 counterexample, 2 inconclusive
int exit_code(Status s);
// counterexample > inconclusive > verified
Status worst(Status a, Status b);

// An isomorphism class of families meeting a bound with equality.
struct EqualityClass {
  std::string label;  // name of the matching reference family, or "other"
  Family representative;  // canonically smallest member seen
  std::uint64_t count = 0;
  bool allowed = true;
};

inline constexpr std::size_t kStoredCounterexamples = 16;

struct VerificationReport {
  std::string theorem;
  Json params = Json::object();
  Status status = Status::Verified;
  // The canonically smallest counterexamples; counterexample_count has the total.
  std::vector<Family> counterexamples;
  std::uint64_t counterexample_count = 0;
  std::vector<EqualityClass> equality_classes;
  Json stats = Json::object();
  Json budget = Json::object();
  std::vector<std::string> notes;

  // Keeps status consistent with the counterexample list.
  void add_counterexample(const Family& f);
  void mark_inconclusive(const std::string& why);
  // A violation with no family attached (e.g. a formula mismatch).
  void add_failure(const std::string& why);

  Json to_json() const;
  // One CSV row: theorem,params,status,counterexamples,equality_classes,examined
  std::string csv_row() const;
  static std::string csv_header();
};

// A named run of several reports (one per suite item).
struct AggregateReport {
  std::string suite;
  Status status = Status::Verified;
  std::vector<VerificationReport> items;

  void add(VerificationReport r);
  Json to_json() const;
};

}  // namespace extremal
