#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "manifest.hpp"

namespace extremal::cli {

// Exit code for bad flags or parameters outside a formula's range.
inline constexpr int kUsageError = 3;

struct ConstructArgs {
  std::string family;
  int n = 0, k = 0;
  int u = 0, i = 0, l = 0, s = 0, m = 0;
  int center = 1;
  std::string out;
};

struct BoundArgs {
  std::string name;
  int n = 0, k = 0, m = 0, s = 0, z = 0, a = 0, b = 0, j = 0, r = 0;
  std::optional<double> u;
  std::string size;  // decimal, for kk
};

struct VerifyArgs {
  std::string theorem;
  int n = 0, k = 0, t = 3, m = 0, s = 0, a = 0, b = 0;
  double u = 0;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  std::int64_t budget_ms = 600000;
  std::uint64_t budget_nodes = 10000000;
  unsigned threads = 1;
  std::string family_path, msub_path;
  std::string report, csv;
};

struct EnumerateArgs {
  int n = 0, k = 0;
  std::size_t min_size = 0;
  bool dedup = false;
  std::string pivot = "max-degree";
  std::int64_t budget_ms = 0;
  std::uint64_t budget_nodes = 0;
  std::uint64_t max_families = 0;
  unsigned threads = 1;
  std::string out;
};

struct ReplicateArgs {
  std::string suite;
  std::optional<std::uint64_t> seed;
  std::int64_t budget_ms = 600000;
  std::uint64_t budget_nodes = 10000000;
  std::uint64_t samples = 10000;
  unsigned threads = 1;
  std::string report;
};

int cmd_construct(const ConstructArgs& a, RunManifest& manifest);
int cmd_size(const ConstructArgs& a);
int cmd_bound(const BoundArgs& a);
int cmd_verify(const VerifyArgs& a, RunManifest& manifest);
int cmd_enumerate(const EnumerateArgs& a, RunManifest& manifest);
int cmd_replicate(const ReplicateArgs& a, RunManifest& manifest);

}  // namespace extremal::cli
