#include "extremal/isomorphism.hpp"

#include <algorithm>
#include <numeric>

namespace extremal {

namespace {

struct Profile {
  int n = 0;
  std::vector<int> degree;                // [0, n)
  std::vector<std::vector<int>> codegree;  // [0, n) x [0, n)
  std::vector<std::vector<int>> signature; // degree followed by sorted co-degrees

  explicit Profile(const Family& f) : n(f.n()), degree(n, 0), codegree(n, std::vector<int>(n, 0)) {
    for (SetWord s : f) {
      const auto elems = to_elements(s);
      for (std::size_t a = 0; a < elems.size(); ++a) {
        ++degree[elems[a] - 1];
        for (std::size_t b = a + 1; b < elems.size(); ++b) {
          ++codegree[elems[a] - 1][elems[b] - 1];
          ++codegree[elems[b] - 1][elems[a] - 1];
        }
      }
    }
    signature.resize(n);
    for (int x = 0; x < n; ++x) {
      std::vector<int> row;
      row.reserve(n);
      for (int y = 0; y < n; ++y)
        if (y != x) row.push_back(codegree[x][y]);
      std::sort(row.begin(), row.end());
      signature[x].push_back(degree[x]);
      signature[x].insert(signature[x].end(), row.begin(), row.end());
    }
  }
};

class Matcher {
 public:
  Matcher(const Family& f, const Family& g) : f_(f), g_(g), pf_(f), pg_(g) {}

  std::optional<Permutation> run() {
    const int n = f_.n();
    candidates_.assign(n, {});
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y)
        if (pf_.signature[x] == pg_.signature[y]) candidates_[x].push_back(y);
      if (candidates_[x].empty()) return std::nullopt;
    }

    // Most constrained first; among equals, the element with larger degree.
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      if (candidates_[a].size() != candidates_[b].size())
        return candidates_[a].size() < candidates_[b].size();
      return pf_.degree[a] > pf_.degree[b];
    });
    std::vector<int> position(n);
    for (int p = 0; p < n; ++p) position[order_[p]] = p;

    closing_.assign(n, {});
    for (SetWord s : f_) {
      int last = -1;
      for (int e : to_elements(s)) last = std::max(last, position[e - 1]);
      // 0-uniform sets have no elements; they match trivially when sizes agree.
      if (last >= 0) closing_[last].push_back(s);
    }

    image_.assign(n, -1);
    used_.assign(n, false);
    if (!place(0)) return std::nullopt;
    Permutation p(n);
    for (int x = 0; x < n; ++x) p[x] = image_[x] + 1;
    return p;
  }

 private:
  bool place(int pos) {
    const int n = f_.n();
    if (pos == n) return true;
    const int x = order_[pos];
    for (int y : candidates_[x]) {
      if (used_[y]) continue;
      bool ok = true;
      for (int q = 0; q < pos && ok; ++q) {
        const int xp = order_[q];
        ok = pf_.codegree[x][xp] == pg_.codegree[y][image_[xp]];
      }
      if (!ok) continue;
      image_[x] = y;
      used_[y] = true;
      for (SetWord s : closing_[pos]) {
        SetWord img = 0;
        for (SetWord r = s; r != 0; r &= r - 1) img |= SetWord{1} << image_[min_element(r) - 1];
        if (!g_.contains(img)) {
          ok = false;
          break;
        }
      }
      if (ok && place(pos + 1)) return true;
      image_[x] = -1;
      used_[y] = false;
    }
    return false;
  }

  const Family& f_;
  const Family& g_;
  Profile pf_, pg_;
  std::vector<std::vector<int>> candidates_;
  std::vector<int> order_;
  std::vector<std::vector<SetWord>> closing_;
  std::vector<int> image_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<Permutation> are_isomorphic(const Family& f, const Family& g) {
  if (f.params() != g.params() || f.size() != g.size()) return std::nullopt;
  if (f == g) return identity_permutation(f.n());
  return Matcher(f, g).run();
}

std::vector<std::int64_t> iso_fingerprint(const Family& f) {
  Profile p(f);
  std::vector<std::vector<int>> sigs = p.signature;
  std::sort(sigs.begin(), sigs.end());
  std::vector<std::int64_t> out{f.n(), f.k(), static_cast<std::int64_t>(f.size())};
  for (const auto& s : sigs) out.insert(out.end(), s.begin(), s.end());
  return out;
}

}  // namespace extremal
