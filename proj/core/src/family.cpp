#include "extremal/family.hpp"

#include <algorithm>
#include <sstream>

namespace extremal {

SetWord from_elements(const std::vector<int>& elements) {
  SetWord out = 0;
  for (int e : elements) {
    if (e < 1 || e > kMaxGround) throw FamilyError("element " + std::to_string(e) + " out of range");
    out |= element_bit(e);
  }
  return out;
}

std::vector<int> to_elements(SetWord a) {
  std::vector<int> out;
  out.reserve(set_size(a));
  for (; a != 0; a &= a - 1) out.push_back(min_element(a));
  return out;
}

void Params::validate() const {
  if (n < 1 || n > kMaxGround)
    throw FamilyError("ground set size n=" + std::to_string(n) + " outside [1, 64]");
  if (k < 0 || k > n)
    throw FamilyError("uniformity k=" + std::to_string(k) + " outside [0, n]");
}

void Params::require_kneser(const char* what) const {
  if (!kneser_regime())
    throw std::domain_error(std::string(what) + " requires n > 2k (got n=" + std::to_string(n) +
                            ", k=" + std::to_string(k) + ")");
}

Family Family::from_masks(Params params, std::vector<SetWord> sets) {
  params.validate();
  const SetWord universe = ground(params.n);
  for (SetWord s : sets) {
    if (!subset_of(s, universe)) throw FamilyError("set has an element outside [n]");
    if (set_size(s) != params.k)
      throw FamilyError("set of size " + std::to_string(set_size(s)) + " in a " +
                        std::to_string(params.k) + "-uniform family");
  }
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return Family(params, std::move(sets));
}

Family Family::from_sorted_unchecked(Params params, std::vector<SetWord> sets) {
  return Family(params, std::move(sets));
}

bool Family::contains(SetWord a) const { return std::binary_search(sets_.begin(), sets_.end(), a); }

bool Family::includes(const Family& other) const {
  return params_ == other.params_ &&
         std::includes(sets_.begin(), sets_.end(), other.sets_.begin(), other.sets_.end());
}

std::strong_ordering operator<=>(const Family& a, const Family& b) {
  if (auto c = a.params_.n <=> b.params_.n; c != 0) return c;
  if (auto c = a.params_.k <=> b.params_.k; c != 0) return c;
  return std::lexicographical_compare_three_way(a.sets_.begin(), a.sets_.end(), b.sets_.begin(),
                                                b.sets_.end());
}

Family make_family(Params params, const std::vector<std::vector<int>>& sets) {
  params.validate();
  std::vector<SetWord> masks;
  masks.reserve(sets.size());
  for (const auto& elems : sets) {
    for (int e : elems)
      if (e < 1 || e > params.n)
        throw FamilyError("element " + std::to_string(e) + " out of range [1, " +
                          std::to_string(params.n) + "]");
    const SetWord m = from_elements(elems);
    if (set_size(m) != static_cast<int>(elems.size())) throw FamilyError("repeated element in a set");
    masks.push_back(m);
  }
  return Family::from_masks(params, std::move(masks));
}

Family complete_family(Params params) {
  params.validate();
  std::vector<SetWord> sets;
  for_each_subset(ground(params.n), params.k, [&](SetWord s) { sets.push_back(s); });
  return Family::from_sorted_unchecked(params, std::move(sets));
}

std::string describe(const Family& f) {
  std::ostringstream os;
  os << "n=" << f.n() << " k=" << f.k() << " {";
  bool first_set = true;
  for (SetWord s : f) {
    os << (first_set ? "" : ", ") << '{';
    bool first = true;
    for (int e : to_elements(s)) {
      os << (first ? "" : ",") << e;
      first = false;
    }
    os << '}';
    first_set = false;
  }
  os << '}';
  return os.str();
}

}  // namespace extremal
