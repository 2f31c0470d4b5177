#include "manifest.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace extremal::cli {

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return sha256_hex(buf.str());
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char out[32];
  std::strftime(out, sizeof out, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return out;
}

RunManifest start_manifest(int argc, char** argv) {
  RunManifest m;
  m.version = EXTREMAL_VERSION;
  for (int i = 0; i < argc; ++i) {
    if (i) m.command_line += ' ';
    m.command_line += argv[i];
  }
  m.started = utc_now();
  return m;
}

void RunManifest::add_input(const std::string& path) { inputs.emplace_back(path, sha256_file(path)); }
void RunManifest::add_output(const std::string& path) { outputs.emplace_back(path, sha256_file(path)); }
void RunManifest::finish() { finished = utc_now(); }

Json RunManifest::to_json() const {
  Json j;
  j["version"] = version;
  j["command_line"] = command_line;
  j["seed"] = seed ? Json(*seed) : Json(nullptr);
  j["started"] = started;
  j["finished"] = finished;
  auto files = [](const auto& list) {
    Json arr = Json::array();
    for (const auto& [path, digest] : list) arr.push_back({{"path", path}, {"sha256", digest}});
    return arr;
  };
  j["inputs"] = files(inputs);
  j["outputs"] = files(outputs);
  return j;
}

}  // namespace extremal::cli
