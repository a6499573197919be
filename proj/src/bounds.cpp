#include "symiso/bounds.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "symiso/permutation.hpp"
#include "symiso/subset_sweep.hpp"

namespace symiso {

namespace {

void require_measure(const Rational &p, const char *what)
{
  if (sgn(p) <= 0 || p > Rational(1, 2))
    throw std::invalid_argument(std::string(what) + ": p must lie in (0, 1/2]");
}

// Root of an increasing f on [lo, hi] with f(lo) <= target <= f(hi).
template <class F>
double bisect(F f, double lo, double hi, double target)
{
  for (int iter = 0; iter < 2000; ++iter) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi)
      break;
    if (f(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  return std::fabs(f(lo) - target) <= std::fabs(f(hi) - target) ? lo : hi;
}

} // namespace

namespace {

// Largest integer x >= 0 with fits(x), starting from a floating-point
// guess; fits must be monotone. Keeps floors exact when the root is an
// integer that bisection approaches from below.
std::int64_t exact_floor(double guess, const std::function<bool(std::int64_t)> &fits)
{
  auto x = std::max<std::int64_t>(0, static_cast<std::int64_t>(std::floor(guess)));
  while (fits(x + 1))
    ++x;
  while (x > 0 && !fits(x))
    --x;
  return x;
}

// base^exp * p <= 1, exactly.
bool power_within(const BigInt &base, std::int64_t exp, const Rational &p)
{
  BigInt power;
  mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return Rational(power) * p <= 1;
}

} // namespace

BoundParams solve_K(const Rational &p, int M)
{
  require_measure(p, "solve_K");
  if (M < 1)
    throw std::invalid_argument("solve_K: M must be positive");
  const double target = -ln_of(p);
  auto f = [](double K) { return 2.0 * K * std::log(K); };
  const double hi = 2.0 * (-log2_of(p)) + 2.0;
  BoundParams out;
  out.p = p;
  out.M = M;
  out.K = bisect(f, 1.0, hi, target);
  // t M <= K  iff  (t M)^{2 t M} <= 1/p
  out.t_p = exact_floor(out.K / M, [&](std::int64_t t) {
    const std::int64_t x = t * M;
    return power_within(BigInt(static_cast<long>(x)), 2 * x, p);
  });
  out.residual = std::fabs(f(out.K) - target) / target;
  return out;
}

KappaParams solve_kappa(const Rational &p, int i)
{
  require_measure(p, "solve_kappa");
  if (i < 1)
    throw std::invalid_argument("solve_kappa: i must be positive");
  const double target = -ln_of(p);
  const double li = std::log(static_cast<double>(i));
  // kappa (ln i + ln kappa) is increasing for i kappa > 1/e and vanishes at 1/i
  auto f = [li](double kappa) { return kappa * (li + std::log(kappa)); };
  KappaParams out;
  out.i = i;
  out.kappa = bisect(f, 1.0 / i, target + 3.0, target);
  // k <= kappa  iff  (i k)^k <= 1/p
  out.k = exact_floor(out.kappa, [&](std::int64_t k) {
    return power_within(BigInt(static_cast<long>(i * k)), k, p);
  });
  out.residual = std::fabs(f(out.kappa) - target) / target;
  return out;
}

int minimal_degree_for(const Rational &p)
{
  if (sgn(p) <= 0 || p > 1)
    throw std::invalid_argument("minimal_degree_for: p must lie in (0, 1]");
  int n = 1;
  while (Rational(factorial(static_cast<unsigned>(n))) * p < 1)
    ++n;
  return n;
}

KSandwich k_sandwich(const BoundParams &params, int n)
{
  KSandwich out;
  const double log_inv_p = -log2_of(params.p);
  const double loglog = std::log2(1.0 - log2_of(params.p));
  out.lower = log_inv_p / (2.0 * loglog);
  out.K = params.K;
  out.n = n;
  out.lower_holds = out.lower <= params.K;
  out.upper_applicable = params.p * Rational(factorial(static_cast<unsigned>(n))) >= 1;
  out.upper_holds = !out.upper_applicable || params.K <= n;
  return out;
}

TpSandwich tp_sandwich(const BoundParams &params, int n)
{
  TpSandwich out;
  const double log_inv_p = -log2_of(params.p);
  const double loglog = std::log2(1.0 - log2_of(params.p));
  out.lower = log_inv_p / (4.0 * params.M * loglog);
  out.t_p = params.t_p;
  out.upper = static_cast<double>(n) / params.M;
  out.in_regime = params.K >= params.M;
  out.lower_holds = static_cast<double>(out.t_p) >= out.lower;
  out.upper_applicable = params.p * Rational(factorial(static_cast<unsigned>(n))) >= 1;
  out.upper_holds = !out.upper_applicable || static_cast<double>(out.t_p) <= out.upper;
  return out;
}

Rational fixed_subset_average(const ConjClassSet &set, const PartitionTable &table, int s)
{
  if (set.n() != table.n())
    throw std::invalid_argument("fixed_subset_average: n mismatch");
  if (s < 0 || 2 * s > table.n())
    throw std::invalid_argument("fixed_subset_average: need 0 <= s <= n/2");
  BigInt total = 0;
  for (auto l : set.member_indices())
    total += class_size(table[l]) * xi_two_row(s, table[l]);
  Rational r(total, factorial(static_cast<unsigned>(table.n())));
  r.canonicalize();
  return r;
}

JensenChain jensen_chain(const Partition &lambda, int s)
{
  if (s < 1 || 2 * s > lambda.n())
    throw std::invalid_argument("jensen_chain: need 1 <= s <= n/2");
  JensenChain out;
  out.xi = xi_two_row(s, lambda);
  BigInt short_cycles = 0;
  BigInt power_sum = 0;
  for (int i = 1; i <= s; ++i) {
    const auto c = static_cast<unsigned long>(lambda.multiplicity(i));
    short_cycles += c;
    BigInt pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), c, static_cast<unsigned long>(s));
    power_sum += pw;
  }
  mpz_pow_ui(out.middle.get_mpz_t(), short_cycles.get_mpz_t(), static_cast<unsigned long>(s));
  BigInt coeff;
  mpz_ui_pow_ui(coeff.get_mpz_t(), static_cast<unsigned long>(s), static_cast<unsigned long>(s - 1));
  out.right = coeff * power_sum;
  out.holds = out.xi <= out.middle && out.middle <= out.right;
  return out;
}

bool jensen_chain_check(const Partition &lambda, int s) { return jensen_chain(lambda, s).holds; }

MomentTailReport moment_tail_check(int s, int k, int M)
{
  if (M < 1 || s < 0 || k < 1)
    throw std::invalid_argument("moment_tail_check: need M >= 1, s >= 0, k >= 1");
  if (static_cast<std::int64_t>(M) * s > k)
    throw std::invalid_argument("moment_tail_check: precondition M s <= k fails");
  if (std::exp(static_cast<double>(M)) > static_cast<double>(k))
    throw std::invalid_argument("moment_tail_check: precondition e^M <= k fails");

  MomentTailReport out;
  out.s = s;
  out.k = k;
  out.M = M;
  out.cutoff = k + kTailExplicitTerms;

  // log of j^s / j!, nudged upward past the rounding error of log/lgamma
  auto log_term = [s](int j) {
    const double v = s * std::log(static_cast<double>(j)) - std::lgamma(static_cast<double>(j) + 1.0);
    return v + 1e-12 * (1.0 + std::fabs(v));
  };

  double peak = -std::numeric_limits<double>::infinity();
  std::vector<double> logs;
  logs.reserve(kTailExplicitTerms + 1);
  for (int j = k; j <= out.cutoff; ++j) {
    logs.push_back(log_term(j));
    peak = std::max(peak, logs.back());
  }
  double scaled = 0;
  for (double v : logs)
    scaled += std::exp(v - peak);
  const double log_partial = peak + std::log(scaled) * (1.0 + 1e-12);

  // term(j+1)/term(j) = ((j+1)/j)^s / (j+1), decreasing in j
  const double j0 = static_cast<double>(out.cutoff) + 1.0;
  out.tail_ratio = std::exp(s * std::log1p(1.0 / j0) - std::log(j0 + 1.0));
  if (!(out.tail_ratio < 0.5))
    throw InvariantViolation("moment_tail_check: tail ratio not below 1/2");
  const double log_tail = log_term(out.cutoff + 1) - std::log1p(-out.tail_ratio);

  const double hi = std::max(log_partial, log_tail);
  const double lo = std::min(log_partial, log_tail);
  out.log_lhs_upper = hi + std::log1p(std::exp(lo - hi)) + 1e-12 * (1.0 + std::fabs(hi));
  out.log_rhs = -(1.0 - 3.0 / M) * k * std::log(static_cast<double>(k));
  out.holds = out.log_lhs_upper <= out.log_rhs;
  return out;
}

namespace {

struct RatioPartial {
  std::uint64_t sets = 0;
  double min_ratio = std::numeric_limits<double>::infinity();
  std::uint64_t argmin_mask = 0;
  std::int64_t argmin_size = 0;
  std::int64_t argmin_boundary = 0;
  bool all_positive = true;
  std::uint64_t diaconis_violations = 0;
  std::map<std::int64_t, std::uint64_t> bins;
};

bool better(double r, std::uint64_t mask, double best, std::uint64_t best_mask)
{
  return r < best || (r == best && mask_lex_less(mask, best_mask));
}

} // namespace

RatioReport isoperimetric_ratio(int n, unsigned workers)
{
  if (n < 2 || n > 8)
    throw std::out_of_range("isoperimetric_ratio: n must lie in [2, 8]");
  const PartitionTable table(n);
  const auto matrix = interaction_matrix(table);
  std::vector<std::int64_t> sizes;
  for (const auto &lambda : table)
    sizes.push_back(to_int64(class_size(lambda)));
  const ClassSubsetSweep sweep(matrix, sizes);

  const auto order = static_cast<std::int64_t>(factorial_u64(n));
  const auto prev_order = static_cast<std::int64_t>(factorial_u64(n - 1));
  const double log_order = std::log2(static_cast<double>(order));

  auto partials = sweep.run(workers, RatioPartial{}, [&](RatioPartial &acc, const SweepState &st) {
    if (st.size == 0 || 2 * st.size > order)
      return;
    ++acc.sets;
    if (st.boundary * prev_order < st.size * (order - st.size))
      ++acc.diaconis_violations;
    const double log_inv_p = log_order - std::log2(static_cast<double>(st.size));
    const double scale = log_inv_p / std::log2(1.0 + log_inv_p);
    const double r = static_cast<double>(st.boundary) / (scale * n * static_cast<double>(st.size));
    acc.all_positive &= r > 0;
    ++acc.bins[static_cast<std::int64_t>(std::floor(r / kRatioBinWidth))];
    if (better(r, st.mask, acc.min_ratio, acc.argmin_mask)) {
      acc.min_ratio = r;
      acc.argmin_mask = st.mask;
      acc.argmin_size = st.size;
      acc.argmin_boundary = st.boundary;
    }
  });

  RatioPartial total;
  for (const auto &part : partials) {
    total.sets += part.sets;
    total.all_positive &= part.all_positive;
    total.diaconis_violations += part.diaconis_violations;
    for (const auto &[bin, count] : part.bins)
      total.bins[bin] += count;
    if (part.sets && better(part.min_ratio, part.argmin_mask, total.min_ratio, total.argmin_mask)) {
      total.min_ratio = part.min_ratio;
      total.argmin_mask = part.argmin_mask;
      total.argmin_size = part.argmin_size;
      total.argmin_boundary = part.argmin_boundary;
    }
  }

  RatioReport out;
  out.n = n;
  out.sets = total.sets;
  out.min_ratio = total.min_ratio;
  out.argmin_mask = total.argmin_mask;
  out.argmin_size = total.argmin_size;
  out.argmin_boundary = total.argmin_boundary;
  out.all_positive = total.all_positive;
  out.diaconis_violations = total.diaconis_violations;
  for (const auto &[bin, count] : total.bins)
    out.histogram.push_back({bin * kRatioBinWidth, (bin + 1) * kRatioBinWidth, count});
  return out;
}

WBoundReport w_bound_ingredients(const Partition &alpha)
{
  const int n = alpha.n();
  const int u = n - alpha.first();
  if (u > kMaxWBoundU)
    throw std::out_of_range("w_bound_ingredients: n - alpha_1 must be at most 4");
  if (n > kMaxWBoundN)
    throw std::out_of_range("w_bound_ingredients: n must be at most 9");

  WBoundReport out;
  out.alpha = alpha;
  out.u = u;
  const auto expansion = determinantal_expansion(alpha);
  out.abs_coefficient_sum = expansion.abs_coefficient_sum();
  out.coefficient_bound = factorial(static_cast<unsigned>(u + 1));
  out.coefficient_bound_holds = BigInt(static_cast<long>(out.abs_coefficient_sum)) <= out.coefficient_bound;

  out.boundchi_holds = true;
  out.collapse_holds = true;
  const PartitionTable table(n);
  for (const auto &lambda : table) {
    const BigInt chi = murnaghan_nakayama(alpha, lambda);
    BigInt via_xi = 0;
    for (const auto &[beta, c] : expansion.terms) {
      const BigInt abs_c = c < 0 ? -c : c;
      const BigInt xi = xi_on_class(beta, lambda);
      via_xi += abs_c * xi;
      const int rest = n - beta.first();
      if (xi > factorial(static_cast<unsigned>(rest)) * xi_two_row(rest, lambda))
        out.collapse_holds = false;
    }
    if (abs(chi) > via_xi)
      out.boundchi_holds = false;
  }
  return out;
}

} // namespace symiso
