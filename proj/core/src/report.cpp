#include "extremal/report.hpp"

#include <algorithm>
#include <sstream>

namespace extremal {

std::string to_string(Status s) {
  switch (s) {
    case Status::Verified: return "verified";
    case Status::Counterexample: return "counterexample";
    case Status::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

int exit_code(Status s) {
  switch (s) {
    case Status::Verified: return 0;
    case Status::Counterexample: return 1;
    case Status::Inconclusive: return 2;
  }
  return 3;
}

Status worst(Status a, Status b) {
  auto rank = [](Status s) {
    return s == Status::Counterexample ? 2 : s == Status::Inconclusive ? 1 : 0;
  };
  return rank(a) >= rank(b) ? a : b;
}

void VerificationReport::add_counterexample(const Family& f) {
  ++counterexample_count;
  status = Status::Counterexample;
  auto pos = std::lower_bound(counterexamples.begin(), counterexamples.end(), f);
  if (pos != counterexamples.end() && *pos == f) return;
  counterexamples.insert(pos, f);
  if (counterexamples.size() > kStoredCounterexamples) counterexamples.pop_back();
}

void VerificationReport::mark_inconclusive(const std::string& why) {
  if (status == Status::Verified) status = Status::Inconclusive;
  notes.push_back(why);
}

void VerificationReport::add_failure(const std::string& why) {
  ++counterexample_count;
  status = Status::Counterexample;
  notes.push_back(why);
}

Json VerificationReport::to_json() const {
  Json j;
  j["theorem"] = theorem;
  j["params"] = params;
  j["status"] = to_string(status);
  Json ce = Json::array();
  for (const Family& f : counterexamples) ce.push_back(family_to_json(f));
  j["counterexample_count"] = counterexample_count;
  j["counterexamples"] = std::move(ce);
  Json classes = Json::array();
  for (const EqualityClass& c : equality_classes) {
    Json e;
    e["label"] = c.label;
    e["allowed"] = c.allowed;
    e["count"] = c.count;
    e["representative"] = family_to_json(c.representative);
    classes.push_back(std::move(e));
  }
  j["equality_classes"] = std::move(classes);
  j["stats"] = stats;
  j["budget"] = budget;
  j["notes"] = notes;
  return j;
}

std::string VerificationReport::csv_header() {
  return "theorem,params,status,counterexamples,equality_classes,examined";
}

std::string VerificationReport::csv_row() const {
  std::string p = params.dump();
  std::string quoted;
  for (char c : p) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
  std::ostringstream os;
  os << theorem << ",\"" << quoted << "\"," << to_string(status) << ',' << counterexample_count << ','
     << equality_classes.size() << ',' << stats.value("families_examined", std::uint64_t{0});
  return os.str();
}

void AggregateReport::add(VerificationReport r) {
  status = worst(status, r.status);
  items.push_back(std::move(r));
}

Json AggregateReport::to_json() const {
  Json j;
  j["suite"] = suite;
  j["status"] = to_string(status);
  Json arr = Json::array();
  for (const auto& r : items) arr.push_back(r.to_json());
  j["items"] = std::move(arr);
  return j;
}

}  // namespace extremal
