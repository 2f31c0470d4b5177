#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "extremal/family.hpp"

namespace extremal {

using Json = nlohmann::ordered_json;

// {"n": int, "k": int, "sets": [[sorted 1-based ints], ...]} in canonical set order.
Json family_to_json(const Family& f);
// Accepts sets and elements in any order; validates like make_family.
Family family_from_json(const Json& j);

// Compact canonical text; write -> read -> write is byte-identical.
std::string write_family(const Family& f);
Family read_family(const std::string& text);

Family load_family(const std::string& path);
void save_family(const Family& f, const std::string& path);

}  // namespace extremal
