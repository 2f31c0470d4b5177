#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "extremal/bounds.hpp"
#include "extremal/enumeration.hpp"
#include "extremal/report.hpp"

namespace extremal {

// A theorem check folded over a stream of families. Verdicts depend only on
// the set of families observed, never on their order.
class TheoremCheck {
 public:
  virtual ~TheoremCheck() = default;

  virtual void observe(const Family& f) = 0;
  // Families smaller than this cannot change the verdict.
  virtual std::size_t size_floor() const = 0;
  virtual VerificationReport report() const = 0;
  // Folds another check of the same kind and parameters into this one.
  virtual void merge(const TheoremCheck& other) = 0;
};

// Reference family for classifying equality cases.
struct ClassReference {
  std::string label;
  Family family;
  bool allowed = true;
};

// Shared fold for "in-scope families have size <= bound, with equality only
// on the allowed isomorphism classes".
class SizeBoundCheck : public TheoremCheck {
 public:
  using Scope = std::function<bool(const Family&)>;

  SizeBoundCheck(std::string theorem, Json params, Scope scope, ExactCount bound,
                 std::vector<ClassReference> references, bool other_classes_allowed);

  void observe(const Family& f) override;
  std::size_t size_floor() const override;
  VerificationReport report() const override;
  void merge(const TheoremCheck& other) override;

  void add_note(std::string note) { notes_.push_back(std::move(note)); }
  const ExactCount& bound() const { return bound_; }

 private:
  std::string theorem_;
  Json params_;
  Scope scope_;
  ExactCount bound_;
  std::vector<ClassReference> references_;
  bool other_allowed_;
  std::vector<std::string> notes_;

  std::uint64_t examined_ = 0;
  std::uint64_t in_scope_ = 0;
  std::uint64_t equality_cases_ = 0;
  std::size_t largest_in_scope_ = 0;
  std::vector<EqualityClass> classes_;
  VerificationReport violations_;  // only its counterexample fields are used
};

// Intersecting families have size <= C(n-1, k-1), with equality only on full stars.
std::unique_ptr<SizeBoundCheck> make_ekr_check(Params params);
// Intersecting families with diversity >= C(n-u-1, n-k-1) have size <= kz_bound(n, k, u).
std::unique_ptr<SizeBoundCheck> make_thm1_check(Params params, double u);
// Intersecting families with diversity >= 2 have size <= hk_bound(n, k); equality
// only on J_2 (k >= 5) or on J_2 and E_{n-k} (k = 4).
std::unique_ptr<SizeBoundCheck> make_hk_check(Params params);
// |F| <= |J_{k-t+1}| whenever the diversity is attained at some element c with
// F(bar c) nonempty and |∩ F(bar c)| <= t.
std::unique_ptr<SizeBoundCheck> make_thm4_part2_check(Params params, int t);
// Families outside every E_l have size <= |J_3|, with equality only on the J_3
// (n >= 2k+2) or J_{i>=3} (n = 2k+1) classes. Labeled theorem-4-derived at k = 4.
std::unique_ptr<SizeBoundCheck> make_cor5_check(Params params);

// True when F ⊆ E_l for some l (including the star-like l ∈ {0, 1}), i.e. some
// element c has |F(bar c)| <= 1 or |∩ F(bar c)| = k - 1.
bool inside_some_e_l(const Family& f);

// For every maximal family: every minimal M ⊆ F(bar 1) (after moving a
// diversity minimizer to 1) with common intersection of size t satisfies
// |F| <= |maximal_extension(M)|, with the stated equality classes.
class Thm4Part1Check : public TheoremCheck {
 public:
  Thm4Part1Check(Params params, int t);

  void observe(const Family& f) override;
  std::size_t size_floor() const override { return floor_; }
  VerificationReport report() const override;
  void merge(const TheoremCheck& other) override;

 private:
  Params params_;
  int t_;
  std::size_t floor_ = 0;
  std::vector<ClassReference> references_;
  std::uint64_t examined_ = 0;
  std::uint64_t pairs_checked_ = 0;
  std::uint64_t equality_cases_ = 0;
  std::vector<EqualityClass> classes_;
  VerificationReport violations_;
};

// Smallest |maximal_extension(M)| over minimal M ⊆ C([2,n], k) with core size t.
std::size_t thm4_part1_floor(Params params, int t);

// Single-instance check of |f| <= |maximal_extension(m_sub)| with the equality clause.
VerificationReport verify_thm4_part1(const Family& f, const Family& m_sub);

// Convenience folds over explicit family lists.
VerificationReport verify_thm1(Params params, double u, std::span<const Family> families);
VerificationReport verify_hk(Params params, std::span<const Family> families);
VerificationReport verify_thm4_part2(Params params, int t, std::span<const Family> families);
VerificationReport verify_cor5(Params params, std::span<const Family> families);

// Runs a check over every maximal intersecting family with size >= its floor.
VerificationReport run_exhaustive(TheoremCheck& check, Params params, const EnumBudget& budget,
                                  EnumOptions options = {});
// One enumeration shared by several checks (run at the smallest floor; each
// check sees only the families at or above its own floor). Reports in input order.
std::vector<VerificationReport> run_exhaustive(std::span<TheoremCheck* const> checks, Params params,
                                               const EnumBudget& budget, EnumOptions options = {});
// Runs a check over `samples` random maximal intersecting families.
VerificationReport run_sampled(TheoremCheck& check, Params params, std::uint64_t samples,
                               std::uint64_t seed);

// Exhaustive check over minimal tau=2 families of s-sets over [m]: |H| <= s+1,
// |F| <= f(|H|), and the unique maximum f2s_size + 2 of |F| + |H| on T_2^s copies.
VerificationReport verify_lemma7(int m, int s, int k);

// Randomized check of the cross-intersecting bounds on |A| + |B| with A the
// largest a-uniform partner of a sampled b-uniform B.
VerificationReport verify_cross(int n, int a, int b, std::uint64_t samples, std::uint64_t seed);

// Outcome of one (B, A = max partner) pair against both bounds.
struct CrossCheck {
  bool easy_applies = false;
  bool easy_ok = true;
  bool easy_tight = false;
  std::vector<int> j_applied;  // j values whose hypothesis held
  bool j_ok = true;
  bool j_tight = false;
};
CrossCheck check_cross_pair(int n, int a, int b, std::size_t b_size, std::size_t a_size);

}  // namespace extremal
