#include "extremal/family_json.hpp"

#include <fstream>
#include <sstream>

namespace extremal {

Json family_to_json(const Family& f) {
  Json sets = Json::array();
  for (SetWord s : f) sets.push_back(to_elements(s));
  Json j;
  j["n"] = f.n();
  j["k"] = f.k();
  j["sets"] = std::move(sets);
  return j;
}

Family family_from_json(const Json& j) {
  try {
    const Params p{j.at("n").get<int>(), j.at("k").get<int>()};
    return make_family(p, j.at("sets").get<std::vector<std::vector<int>>>());
  } catch (const Json::exception& e) {
    throw FamilyError(std::string("malformed family JSON: ") + e.what());
  }
}

std::string write_family(const Family& f) { return family_to_json(f).dump() + "\n"; }

Family read_family(const std::string& text) {
  try {
    return family_from_json(Json::parse(text));
  } catch (const Json::parse_error& e) {
    throw FamilyError(std::string("family JSON does not parse: ") + e.what());
  }
}

Family load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FamilyError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return read_family(buf.str());
}

void save_family(const Family& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FamilyError("cannot write " + path);
  out << write_family(f);
}

}  // namespace extremal
