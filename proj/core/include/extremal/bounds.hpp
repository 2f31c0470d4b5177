#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace extremal {

using ExactCount = boost::multiprecision::cpp_int;

struct RealBound {
  double value = 0.0;
  double tolerance = 1e-9;
};

// Parameters outside the regime where a formula is stated.
class RegimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// C(n, r); 0 when r < 0 or r > n. Throws RegimeError for n < 0.
ExactCount binom_exact(std::int64_t n, std::int64_t r);

// x(x-1)...(x-r+1)/r!, for x >= r-1 where it is increasing in x.
RealBound binom_real(double x, int r);

// x >= r-1 with binom_real(x, r) = size, by bisection on [r-1, r-1+size].
RealBound kk_threshold_x(const ExactCount& size, int r);
// Lovász form of Kruskal-Katona: binom_real(x, r-1) for that x.
RealBound kk_shadow_lb(const ExactCount& size, int r);

// Hilton-Milner size C(n-1,k-1) - C(n-k-1,k-1) + 1. n > 2k.
ExactCount hm_bound(int n, int k);

// C(n-1,k-1) + C(n-u-1,n-k-1) - C(n-u-1,k-1); n > 2k, 3 <= u <= k.
ExactCount kz_bound_exact(int n, int k, int u);
RealBound kz_bound(int n, int k, double u);
// The diversity threshold C(n-u-1, n-k-1) that switches the bound on.
ExactCount kz_diversity_threshold_exact(int n, int k, int u);
RealBound kz_diversity_threshold(int n, int k, double u);

// C(n-1,k-1) - C(n-k-1,k-1) - C(n-k-2,k-2) + 2; n > 2k, k >= 4.
ExactCount hk_bound(int n, int k);

// Closed-form sizes of the generated families (same ranges as the generators).
ExactCount size_full_star(int n, int k);
ExactCount size_h_u(int n, int k, int u);
ExactCount size_j_i(int n, int k, int i);
ExactCount size_e_l(int n, int k, int l);

// Size of the largest (k-1)-uniform family over [m] cross-intersecting {[s],[s+1,2s]}.
// m >= k + s, k >= 4.
ExactCount f2s_size(int m, int k, int s);
// Upper bound on the cross-partner of a minimal tau=2 family of z s-sets; 2 <= z <= s+1.
ExactCount f_of_z(int m, int k, int s, int z);

// |A| + |B| <= C(n, a). a, b > 0, n > a + b.
ExactCount cross_easy_bound(int n, int a, int b);
// Whether the size of B allows the previous bound: b < a, or |B| <= C(n-b-1+a, a-1).
bool cross_easy_applies(int n, int a, int b, const ExactCount& b_size);
// C(n,a) + C(n-j,b-j) - C(n-j,a). b < a, 1 <= j <= b.
ExactCount cross_j_bound(int n, int a, int b, int j);
// Minimum |B| for the previous bound: C(n-j, b-j).
ExactCount cross_j_threshold(int n, int b, int j);

// s + 1
ExactCount bollobas_limit(int s);

// Narrowing helper for counts that are known to be small.
std::int64_t to_int64(const ExactCount& c);
std::string to_string(const ExactCount& c);

}  // namespace extremal
