#ifndef SYMISO_BOUNDS_HPP
#define SYMISO_BOUNDS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "symiso/characters.hpp"
#include "symiso/class_set.hpp"

namespace symiso {

// Numerical realization of the inequality chain behind the lower bound on
// |dA| for conjugation-invariant A. Transcendental quantities (K, kappa)
// are solved in log domain in double precision and carry a residual
// certificate; everything else is exact. Logarithms in bound formulas are
// base 2.

inline constexpr double kSolverTolerance = 1e-12;
inline constexpr int kDefaultM = 18;

/// K = K(p) with K^{2K} = 1/p, and t_p = floor(K/M).
struct BoundParams {
  Rational p;
  double K = 0;
  int M = kDefaultM;
  std::int64_t t_p = 0;
  /// |2K ln K - ln(1/p)| / ln(1/p)
  double residual = 0;
};

/// Bisection on K in [1, 2 log2(1/p) + 2]. Requires 0 < p <= 1/2, M >= 1.
BoundParams solve_K(const Rational &p, int M = kDefaultM);

/// kappa = kappa_p(i) with i^kappa kappa^kappa = 1/p, and k = floor(kappa).
struct KappaParams {
  int i = 1;
  double kappa = 0;
  std::int64_t k = 0;
  double residual = 0;
};

KappaParams solve_kappa(const Rational &p, int i);

/// Smallest n with n! p >= 1, i.e. the least degree at which a nonempty
/// set can have measure p.
int minimal_degree_for(const Rational &p);

/// log(1/p) / (2 log log(2/p)) <= K, and K <= n whenever p >= 1/n!.
struct KSandwich {
  double lower = 0;
  double K = 0;
  int n = 0;
  bool lower_holds = false;
  bool upper_applicable = false;
  bool upper_holds = false;
};

KSandwich k_sandwich(const BoundParams &params, int n);

/// log(1/p) / (4M log log(2/p)) <= t_p <= n/M. The lower half relies on
/// floor(x) >= x/2, so it is only claimed in the regime K >= M.
struct TpSandwich {
  double lower = 0;
  std::int64_t t_p = 0;
  double upper = 0;
  bool in_regime = false;
  bool lower_holds = false;
  bool upper_applicable = false;
  bool upper_holds = false;
};

TpSandwich tp_sandwich(const BoundParams &params, int n);

/// (1/n!) sum_{sigma in A} xi_{(n-s,s)}(sigma), exact. 0 <= s <= n/2.
Rational fixed_subset_average(const ConjClassSet &set, const PartitionTable &table, int s);

/// xi_{(n-s,s)}(lambda) <= (sum_{i<=s} C_i)^s <= s^{s-1} sum_{i<=s} C_i^s.
struct JensenChain {
  BigInt xi;
  BigInt middle;
  BigInt right;
  bool holds = false;
};

JensenChain jensen_chain(const Partition &lambda, int s);
bool jensen_chain_check(const Partition &lambda, int s);

/// sum_{j>=k} j^s/j! <= k^{-(1-3/M)k} for Ms <= k and e^M <= k. Values
/// are natural logarithms: both sides underflow double for realistic k.
struct MomentTailReport {
  int s = 0;
  int k = 0;
  int M = 0;
  int cutoff = 0;
  double tail_ratio = 0;
  double log_lhs_upper = 0;
  double log_rhs = 0;
  bool holds = false;
};

inline constexpr int kTailExplicitTerms = 200;

/// Sums terms j = k .. k+200 explicitly (rounded upward), then bounds the
/// rest by a geometric series whose ratio is certified below 1/2. Throws
/// std::invalid_argument if a precondition fails.
MomentTailReport moment_tail_check(int s, int k, int M);

struct RatioHistogramBin {
  double lo = 0;
  double hi = 0;
  std::uint64_t count = 0;
};

/// r(A) = |dA| / ((log(1/p) / log log(2/p)) n |A|) over every nonempty
/// conjugation-invariant A with |A| <= n!/2.
struct RatioReport {
  int n = 0;
  std::uint64_t sets = 0;
  double min_ratio = 0;
  std::uint64_t argmin_mask = 0;
  std::int64_t argmin_size = 0;
  std::int64_t argmin_boundary = 0;
  bool all_positive = false;
  std::uint64_t diaconis_violations = 0;
  std::vector<RatioHistogramBin> histogram;
};

inline constexpr double kRatioBinWidth = 0.25;

RatioReport isoperimetric_ratio(int n, unsigned workers = 1);

/// Links of the |w_alpha| bound, evaluated exactly on every class:
/// |chi_alpha| <= sum |c| xi_beta (boundchi), xi_beta <= (n-beta_1)!
/// xi_{(beta_1, n-beta_1)} (row collapse) and sum |c| <= (u+1)!.
struct WBoundReport {
  Partition alpha;
  int u = 0;
  std::int64_t abs_coefficient_sum = 0;
  BigInt coefficient_bound;
  bool coefficient_bound_holds = false;
  bool boundchi_holds = false;
  bool collapse_holds = false;

  bool all_hold() const noexcept { return coefficient_bound_holds && boundchi_holds && collapse_holds; }
};

inline constexpr int kMaxWBoundU = 4;
inline constexpr int kMaxWBoundN = 9;

WBoundReport w_bound_ingredients(const Partition &alpha);

} // namespace symiso

#endif // SYMISO_BOUNDS_HPP
