#include "extremal/bounds.hpp"

#include <cmath>
#include <limits>

namespace extremal {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw RegimeError(what);
}

void require_kneser(int n, int k, const char* what) {
  if (!(n > 2 * k && k >= 1))
    throw RegimeError(std::string(what) + ": requires n > 2k >= 2 (got n=" + std::to_string(n) +
                      ", k=" + std::to_string(k) + ")");
}

bool is_integral(double u) { return std::floor(u) == u; }

}  // namespace

ExactCount binom_exact(std::int64_t n, std::int64_t r) {
  if (n < 0) throw RegimeError("binom_exact: negative top " + std::to_string(n));
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  ExactCount acc = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    acc *= n - r + i;
    acc /= i;
  }
  return acc;
}

RealBound binom_real(double x, int r) {
  require(r >= 0, "binom_real: negative lower index");
  require(x >= r - 1, "binom_real: requires x >= r - 1");
  double acc = 1.0;
  for (int i = 0; i < r; ++i) acc *= (x - i) / (i + 1);
  return {acc, 1e-9};
}

RealBound kk_threshold_x(const ExactCount& size, int r) {
  require(size >= 1, "kk_threshold_x: size must be positive");
  require(r >= 1, "kk_threshold_x: r must be positive");
  const double target = size.convert_to<double>();
  double lo = r - 1;
  double hi = r - 1 + target;
  // binom_real(lo) = 0 < target <= binom_real(hi)
  for (int iter = 0; iter < 400; ++iter) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (binom_real(mid, r).value < target)
      lo = mid;
    else
      hi = mid;
  }
  return {hi, 1e-9};
}

RealBound kk_shadow_lb(const ExactCount& size, int r) {
  const RealBound x = kk_threshold_x(size, r);
  return binom_real(x.value, r - 1);
}

ExactCount hm_bound(int n, int k) {
  require_kneser(n, k, "hm_bound");
  return binom_exact(n - 1, k - 1) - binom_exact(n - k - 1, k - 1) + 1;
}

ExactCount kz_bound_exact(int n, int k, int u) {
  require_kneser(n, k, "kz_bound");
  require(u >= 3 && u <= k, "kz_bound: u must lie in [3, k]");
  return binom_exact(n - 1, k - 1) + binom_exact(n - u - 1, n - k - 1) -
         binom_exact(n - u - 1, k - 1);
}

RealBound kz_bound(int n, int k, double u) {
  require_kneser(n, k, "kz_bound");
  require(u >= 3 && u <= k, "kz_bound: u must lie in [3, k]");
  if (is_integral(u)) return {kz_bound_exact(n, k, static_cast<int>(u)).convert_to<double>(), 0.0};
  const double top = n - u - 1;
  const double v = binom_exact(n - 1, k - 1).convert_to<double>() + binom_real(top, n - k - 1).value -
                   binom_real(top, k - 1).value;
  return {v, 1e-9};
}

ExactCount kz_diversity_threshold_exact(int n, int k, int u) {
  require_kneser(n, k, "kz_bound");
  require(u >= 3 && u <= k, "kz_bound: u must lie in [3, k]");
  return binom_exact(n - u - 1, n - k - 1);
}

RealBound kz_diversity_threshold(int n, int k, double u) {
  require_kneser(n, k, "kz_bound");
  require(u >= 3 && u <= k, "kz_bound: u must lie in [3, k]");
  if (is_integral(u))
    return {kz_diversity_threshold_exact(n, k, static_cast<int>(u)).convert_to<double>(), 0.0};
  return binom_real(n - u - 1, n - k - 1);
}

ExactCount hk_bound(int n, int k) {
  require_kneser(n, k, "hk_bound");
  require(k >= 4, "hk_bound: requires k >= 4");
  return binom_exact(n - 1, k - 1) - binom_exact(n - k - 1, k - 1) - binom_exact(n - k - 2, k - 2) + 2;
}

ExactCount size_full_star(int n, int k) {
  require(k >= 1 && n >= k, "size_full_star: requires 1 <= k <= n");
  return binom_exact(n - 1, k - 1);
}

ExactCount size_h_u(int n, int k, int u) {
  require(u >= 2 && u <= k && n >= u + 1 && n >= k, "size_h_u: requires 2 <= u <= k, n >= u + 1");
  return binom_exact(n - 1, k - 1) - binom_exact(n - u - 1, k - 1) + binom_exact(n - u - 1, k - u);
}

ExactCount size_j_i(int n, int k, int i) {
  require(i >= 1 && i <= k && n >= k + i, "size_j_i: requires 1 <= i <= k, n >= k + i");
  if (i == 1) return binom_exact(n - 1, k - 1) - binom_exact(n - k - 1, k - 1) + 1;
  return 2 + binom_exact(n - 1, k - 1) - 2 * binom_exact(n - k - 1, k - 1) +
         binom_exact(n - k - i, k - 1);
}

ExactCount size_e_l(int n, int k, int l) {
  require(k >= 2 && l >= 2 && l <= n - k, "size_e_l: requires 2 <= l <= n - k");
  ExactCount v = l + binom_exact(n - 1, k - 1) - binom_exact(n - k, k - 1);
  if (l <= k - 1) v += binom_exact(n - k - l, k - 1 - l);
  return v;
}

ExactCount f2s_size(int m, int k, int s) {
  require(k >= 4 && s >= 1 && m >= k + s && m >= 2 * s, "f2s_size: requires k >= 4, m >= k + s, m >= 2s");
  ExactCount v = 0;
  for (int r = 1; r <= s; ++r) v += binom_exact(m - r, k - 2) - binom_exact(m - s - r, k - 2);
  return v;
}

ExactCount f_of_z(int m, int k, int s, int z) {
  require(k >= 4 && s >= 1 && m >= k + s && m >= 2 * s, "f_of_z: requires k >= 4, m >= k + s, m >= 2s");
  require(z >= 2 && z <= s + 1, "f_of_z: requires 2 <= z <= s + 1");
  ExactCount v = 0;
  for (int l = 1; l <= z - 1; ++l) v += binom_exact(m - l, k - 2) - binom_exact(m - s - 1, k - 2);
  for (int l = z; l <= s; ++l) v += binom_exact(m - l, k - 2) - binom_exact(m - s - 2 - (l - z), k - 2);
  return v;
}

ExactCount cross_easy_bound(int n, int a, int b) {
  require(a > 0 && b > 0 && n > a + b, "cross_easy_bound: requires a, b > 0 and n > a + b");
  return binom_exact(n, a);
}

bool cross_easy_applies(int n, int a, int b, const ExactCount& b_size) {
  require(a > 0 && b > 0 && n > a + b, "cross_easy_bound: requires a, b > 0 and n > a + b");
  return b < a || b_size <= binom_exact(n - b - 1 + a, a - 1);
}

ExactCount cross_j_bound(int n, int a, int b, int j) {
  require(a > 0 && b > 0 && n > a + b, "cross_j_bound: requires a, b > 0 and n > a + b");
  require(b < a && j >= 1 && j <= b, "cross_j_bound: requires b < a and 1 <= j <= b");
  return binom_exact(n, a) + binom_exact(n - j, b - j) - binom_exact(n - j, a);
}

ExactCount cross_j_threshold(int n, int b, int j) {
  require(j >= 1 && j <= b && n >= j, "cross_j_threshold: requires 1 <= j <= b");
  return binom_exact(n - j, b - j);
}

ExactCount bollobas_limit(int s) {
  require(s >= 1, "bollobas_limit: requires s >= 1");
  return s + 1;
}

std::int64_t to_int64(const ExactCount& c) {
  if (c > std::numeric_limits<std::int64_t>::max() || c < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("count does not fit in 64 bits: " + c.str());
  return c.convert_to<std::int64_t>();
}

std::string to_string(const ExactCount& c) { return c.str(); }

}  // namespace extremal
