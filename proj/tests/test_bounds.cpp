#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "symiso/bounds.hpp"

using namespace symiso;

TEST_CASE("solve_K")
{
  const auto k16 = solve_K(Rational(1, 16));
  CHECK(k16.K == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(k16.residual <= kSolverTolerance);
  CHECK(k16.t_p == 0);

  const auto half = solve_K(Rational(1, 2));
  CHECK(half.residual <= kSolverTolerance);
  CHECK(2 * half.K * std::log(half.K) == doctest::Approx(std::log(2.0)).epsilon(1e-12));

  const auto tiny = solve_K(parse_rational("1e-30"));
  CHECK(tiny.residual <= kSolverTolerance);
  CHECK(2 * tiny.K * std::log(tiny.K) == doctest::Approx(30 * std::log(10.0)).epsilon(1e-12));

  const auto small_m = solve_K(parse_rational("1e-30"), 3);
  CHECK(small_m.t_p == static_cast<std::int64_t>(std::floor(small_m.K / 3)));

  CHECK_THROWS_AS(solve_K(Rational(3, 4)), std::invalid_argument);
  CHECK_THROWS_AS(solve_K(Rational(0)), std::invalid_argument);
}

TEST_CASE("solve_kappa")
{
  const auto a = solve_kappa(Rational(1, 27), 1);
  CHECK(a.kappa == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(a.k == 3);
  const auto b = solve_kappa(Rational(1, 16), 2);
  CHECK(b.kappa == doctest::Approx(2.0).epsilon(1e-12));
  for (int i = 1; i <= 6; ++i) {
    const auto r = solve_kappa(parse_rational("1e-20"), i);
    CHECK(r.residual <= kSolverTolerance);
    CHECK(r.kappa * std::log(i * r.kappa) == doctest::Approx(20 * std::log(10.0)).epsilon(1e-11));
  }
}

TEST_CASE("K and t_p sandwiches")
{
  CHECK(minimal_degree_for(Rational(1, 2)) == 2);
  CHECK(minimal_degree_for(Rational(1, 24)) == 4);
  CHECK(minimal_degree_for(Rational(1, 25)) == 5);
  BigInt pow10 = 1;
  for (int j = 1; j <= 30; ++j) {
    pow10 *= 10;
    const Rational p(BigInt(1), pow10);
    const int n = minimal_degree_for(p);
    const auto ks = k_sandwich(solve_K(p), n);
    CHECK(ks.lower_holds);
    CHECK(ks.upper_applicable);
    CHECK(ks.upper_holds);
    for (int M = 3; M <= 6; ++M) {
      const auto tp = tp_sandwich(solve_K(p, M), n);
      CHECK(tp.upper_holds);
      if (tp.in_regime)
        CHECK(tp.lower_holds);
    }
  }
  // with M = 18 nothing down to 1e-30 reaches K >= M
  CHECK_FALSE(tp_sandwich(solve_K(parse_rational("1e-30")), 27).in_regime);
}

TEST_CASE("average of two-row permutation characters over a set")
{
  for (int n = 1; n <= 6; ++n) {
    const PartitionTable table(n);
    const auto all = ConjClassSet::all(table);
    CHECK(fixed_subset_average(all, table, 0) == 1);
    if (n >= 2)
      CHECK(fixed_subset_average(all, table, 1) == 1);
    const auto id = ConjClassSet::from_mask(table, std::uint64_t{1} << (table.size() - 1));
    CHECK(fixed_subset_average(id, table, 0) == Rational(1) / factorial(n));
  }
  // A_2 in S_6: sum of fixed points by enumeration
  const PartitionTable t6(6);
  std::int64_t fixed = 0;
  for (const auto &p : oracle::all_perms(6))
    if (oracle::fixed_points(p) >= 2)
      fixed += oracle::fixed_points(p);
  CHECK(fixed_subset_average(make_A_s(t6, 2), t6, 1) == Rational(fixed) / 720);
}

TEST_CASE("Jensen chain")
{
  for (int n = 1; n <= 9; ++n)
    for (const auto &lambda : PartitionTable(n))
      for (int s = 1; s <= std::min(4, n / 2); ++s) {
        const auto c = jensen_chain(lambda, s);
        CHECK(c.holds);
        CHECK(c.xi <= c.middle);
        CHECK(c.middle <= c.right);
        bool small_part = false;
        for (int part : lambda.parts())
          small_part |= part <= s;
        if (!small_part)
          CHECK(c.xi == 0);
      }
}

TEST_CASE("factorial moment tail bound")
{
  const auto a = moment_tail_check(7, 21, 3);
  CHECK(a.holds);
  CHECK(a.log_rhs == doctest::Approx(0.0));
  CHECK(a.tail_ratio < 0.5);
  const auto b = moment_tail_check(67, 404, 6);
  CHECK(b.holds);
  CHECK(b.log_lhs_upper < b.log_rhs);
  CHECK_THROWS_AS(moment_tail_check(5, 100, 6), std::invalid_argument);
  CHECK_THROWS_AS(moment_tail_check(8, 21, 3), std::invalid_argument);

  // compare the log-domain bound with a direct sum where doubles suffice
  const auto c = moment_tail_check(2, 30, 3);
  double direct = 0;
  for (int j = 30; j < 400; ++j)
    direct += std::exp(2 * std::log(j) - std::lgamma(j + 1.0));
  CHECK(std::log(direct) <= c.log_lhs_upper + 1e-12);
  CHECK(std::log(direct) == doctest::Approx(c.log_lhs_upper).epsilon(1e-9));
}

TEST_CASE("w-bound ingredients")
{
  for (int n = 1; n <= 8; ++n)
    for (const auto &alpha : PartitionTable(n)) {
      if (n - alpha.first() > 3)
        continue;
      const auto r = w_bound_ingredients(alpha);
      CHECK(r.all_hold());
      if (alpha.length() == 1)
        CHECK(r.abs_coefficient_sum == 1);
    }
}

TEST_CASE("isoperimetric ratio")
{
  for (int n = 2; n <= 6; ++n) {
    const auto r = isoperimetric_ratio(n, 2);
    CHECK(r.all_positive);
    CHECK(r.min_ratio > 0);
    CHECK(r.diaconis_violations == 0);
    std::uint64_t counted = 0;
    for (const auto &bin : r.histogram)
      counted += bin.count;
    CHECK(counted == r.sets);
  }
  CHECK(isoperimetric_ratio(5, 1).min_ratio == isoperimetric_ratio(5, 4).min_ratio);
}
