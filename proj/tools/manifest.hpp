#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "extremal/family_json.hpp"

namespace extremal::cli {

// Provenance record embedded in every report the tool writes.
struct RunManifest {
  std::string version;
  std::string command_line;
  std::optional<std::uint64_t> seed;
  std::string started;
  std::string finished;
  std::vector<std::pair<std::string, std::string>> inputs;   // path, sha256
  std::vector<std::pair<std::string, std::string>> outputs;  // path, sha256

  void add_input(const std::string& path);
  void add_output(const std::string& path);
  void finish();
  Json to_json() const;
};

RunManifest start_manifest(int argc, char** argv);

std::string sha256_hex(const std::string& bytes);
std::string sha256_file(const std::string& path);
std::string utc_now();

}  // namespace extremal::cli
