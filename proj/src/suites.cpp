#include "symiso/suites.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "symiso/boundaries.hpp"
#include "symiso/bounds.hpp"
#include "symiso/characters.hpp"
#include "symiso/counting.hpp"
#include "symiso/optimizer.hpp"
#include "symiso/spectral.hpp"

namespace symiso {

namespace {

CheckRecord make_record(std::string id, Json params, Json lhs, Json rhs, bool holds, Json witness = nullptr,
                        bool asserted = true)
{
  CheckRecord r;
  r.check_id = std::move(id);
  r.params = std::move(params);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.holds = holds;
  r.witness = std::move(witness);
  r.asserted = asserted;
  return r;
}

int cap(const SuiteOptions &o, int fallback, int limit) { return std::min(o.max_n.value_or(fallback), limit); }

// Counts of each cycle type over all of S_n, by direct enumeration.
std::vector<std::int64_t> enumerate_cycle_types(const PartitionTable &table)
{
  std::vector<std::int64_t> counts(table.size(), 0);
  std::vector<int> img(static_cast<std::size_t>(table.n()));
  std::iota(img.begin(), img.end(), 1);
  do {
    ++counts[table.index_of(cycle_type(img))];
  } while (std::next_permutation(img.begin(), img.end()));
  return counts;
}

// ---------------------------------------------------------------- census

void census_suite(const SuiteOptions &o, VerificationReport &rep)
{
  const int max_n = cap(o, 10, 12);

  for (int n = 0; n <= max_n; ++n) {
    const PartitionTable table(n);
    BigInt total = 0;
    for (const auto &lambda : table)
      total += class_size(lambda);
    rep.add(make_record("core.class_sizes_sum", {{"n", n}}, exact_json(total), exact_json(factorial(n)),
                        total == factorial(n)));
  }

  for (int n = 1; n <= std::min(max_n, 8); ++n) {
    const PartitionTable table(n);
    const auto counts = enumerate_cycle_types(table);
    Json witness = nullptr;
    for (std::size_t l = 0; l < table.size() && witness.is_null(); ++l)
      if (class_size(table[l]) != counts[l])
        witness = table[l].to_string();
    rep.add(make_record("core.class_sizes_vs_enumeration", {{"n", n}}, "class_size", "enumeration",
                        witness.is_null(), witness));

    std::int64_t derangements = counts[0] * 0;
    for (std::size_t l = 0; l < table.size(); ++l)
      if (table[l].multiplicity(1) == 0)
        derangements += counts[l];
    rep.add(make_record("core.derangement_vs_enumeration", {{"m", n}}, exact_json(derangement_count(n)),
                        std::to_string(derangements), derangement_count(n) == derangements));

    bool census_ok = true;
    Json bad = nullptr;
    for (int i = 1; i <= n; ++i) {
      std::vector<std::int64_t> by_j(static_cast<std::size_t>(n / i) + 1, 0);
      for (std::size_t l = 0; l < table.size(); ++l)
        by_j[static_cast<std::size_t>(table[l].multiplicity(i))] += counts[l];
      for (int j = 0; j <= n / i; ++j)
        if (cycle_count_census(n, i, j) != by_j[static_cast<std::size_t>(j)] && census_ok) {
          census_ok = false;
          bad = {{"i", i}, {"j", j}};
        }
    }
    rep.add(make_record("core.goncharov_vs_enumeration", {{"n", n}}, "goncharov", "enumeration", census_ok, bad));
  }

  for (int m = 2; m <= 12; ++m) {
    const BigInt d = derangement_count(m);
    rep.add(make_record("core.derangement_third", {{"m", m}}, exact_json(Rational(d)),
                        exact_json(Rational(factorial(m)) / 3), 3 * d >= factorial(m)));
  }

  for (int n = 1; n <= max_n; ++n) {
    bool ok = true, rows_ok = true;
    Json bad = nullptr;
    for (int i = 1; i <= n; ++i) {
      BigInt row = 0;
      for (int j = 0; j <= n / i; ++j) {
        const BigInt d = cycle_count_census(n, i, j);
        row += d;
        BigInt ipow;
        mpz_ui_pow_ui(ipow.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(j));
        const BigInt denom = ipow * factorial(j);
        bool holds;
        if (i == 1 && j == n - 1)
          holds = d == 0;
        else
          holds = 3 * d * denom >= factorial(n) && d * denom <= factorial(n);
        if (!holds && ok) {
          ok = false;
          bad = {{"i", i}, {"j", j}, {"D", to_string(d)}};
        }
      }
      rows_ok &= row == factorial(n);
    }
    rep.add(make_record("core.goncharov_sandwich", {{"n", n}}, "n!/(3 i^j j!) <= D", "D <= n!/(i^j j!)", ok, bad));
    rep.add(make_record("core.goncharov_row_sums", {{"n", n}}, "sum_j D", "n!", rows_ok));
  }

  {
    BigInt prefix = 0;
    for (int t = 1; t <= 20; ++t) {
      prefix += static_cast<unsigned long>(PartitionTable(t - 1).size());
      rep.add(make_record("core.partition_prefix_sum", {{"t", t}}, exact_json(prefix), exact_json(factorial(t)),
                          prefix <= factorial(t)));
    }
  }

  for (int n = 3; n <= max_n; ++n) {
    const PartitionTable table(n);
    for (int s = 1; s <= n - 2; ++s) {
      const BigInt a = make_A_s(table, s).size();
      const bool holds = 3 * factorial(s) * a >= factorial(n) && a * factorial(s) <= factorial(n);
      rep.add(make_record("sets.A_s_sandwich", {{"n", n}, {"s", s}}, exact_json(a),
                          Json::array({exact_json(Rational(factorial(n)) / (3 * factorial(s))),
                                       exact_json(Rational(factorial(n)) / factorial(s))}),
                          holds));
    }
  }

  for (int n = 4; n <= std::min(max_n, 8); ++n)
    for (int k = 2; 2 * k <= n; ++k) {
      if (n % k)
        continue;
      const BigInt a = static_cast<unsigned long>(make_block_fixing(n, k).size());
      const Rational upper(BigInt(n / k) * factorial(n - k));
      const Rational middle = upper - Rational(binomial(n / k, 2) * factorial(n - 2 * k));
      const Rational lower = Rational(BigInt(n) * factorial(n - k)) / (2 * k);
      const bool holds = lower < middle && middle <= a && a <= upper && factorial(n - k) < a &&
                         a <= factorial(n - k + 1);
      rep.add(make_record("sets.block_fixing_bonferroni", {{"n", n}, {"k", k}}, exact_json(a),
                          Json::array({exact_json(lower), exact_json(middle), exact_json(upper)}), holds));
    }

  for (int n = 1; n <= max_n; ++n) {
    const PartitionTable table(n);
    for (const auto &alpha : table) {
      const int u = n - alpha.first();
      if (u > 4)
        continue;
      const auto sum = determinantal_expansion(alpha).abs_coefficient_sum();
      rep.add(make_record("characters.coefficient_bound", {{"alpha", alpha.to_string()}}, std::to_string(sum),
                          exact_json(factorial(u + 1)), factorial(u + 1) >= sum));
    }
  }
}

// ------------------------------------------------------------ characters

void characters_suite(const SuiteOptions &o, VerificationReport &rep)
{
  const int max_n = cap(o, 10, kMaxCharacterTableN);

  for (int n = 1; n <= max_n; ++n) {
    const CharacterTable chars(n);
    bool ok = true;
    Json bad = nullptr;
    for (std::size_t a = 0; a < chars.size() && ok; ++a)
      for (std::size_t b = a; b < chars.size() && ok; ++b) {
        BigInt s = 0;
        for (std::size_t l = 0; l < chars.size(); ++l)
          s += chars.class_size(l) * chars.value(a, l) * chars.value(b, l);
        if (s != (a == b ? chars.group_order() : BigInt(0))) {
          ok = false;
          bad = {{"alpha", chars.partitions()[a].to_string()}, {"beta", chars.partitions()[b].to_string()}};
        }
      }
    rep.add(make_record("characters.orthonormality", {{"n", n}}, "sum |C| chi_a chi_b", "n! delta", ok, bad));

    bool det_ok = true;
    Json det_bad = nullptr;
    for (std::size_t a = 0; a < chars.size(); ++a) {
      const auto &alpha = chars.partitions()[a];
      if (n - alpha.first() > 4)
        continue;
      for (std::size_t l = 0; l < chars.size() && det_ok; ++l)
        if (chi_via_determinantal(alpha, chars.partitions()[l]) != chars.value(a, l)) {
          det_ok = false;
          det_bad = {{"alpha", alpha.to_string()}, {"lambda", chars.partitions()[l].to_string()}};
        }
    }
    rep.add(make_record("characters.determinantal_vs_mn", {{"n", n}}, "determinantal", "murnaghan_nakayama", det_ok,
                        det_bad));

    bool two_row_ok = true;
    for (int s = 0; 2 * s <= n; ++s) {
      const Partition shape = s > 0 ? Partition({n - s, s}) : Partition({n});
      for (const auto &lambda : chars.partitions())
        two_row_ok &= xi_two_row(s, lambda) == xi_on_class(shape, lambda);
    }
    rep.add(make_record("characters.xi_two_row_vs_dp", {{"n", n}}, "xi_two_row", "xi_on_class", two_row_ok));
  }

  for (int n = 1; n <= std::min(max_n, 6); ++n) {
    const PartitionTable table(n);
    bool ok = true;
    Json bad = nullptr;
    for (const auto &beta : table)
      for (const auto &lambda : table)
        if (ok && xi_on_class(beta, lambda) != xi_bruteforce(beta, class_representative(lambda))) {
          ok = false;
          bad = {{"beta", beta.to_string()}, {"lambda", lambda.to_string()}};
        }
    rep.add(make_record("characters.xi_dp_vs_tabloids", {{"n", n}}, "xi_on_class", "tabloid enumeration", ok, bad));
  }

  for (int n = 1; n <= std::min(max_n, 9); ++n) {
    const PartitionTable table(n);
    bool ok = true;
    for (const auto &beta : table)
      for (const auto &lambda : table) {
        const int rest = n - beta.first();
        ok &= xi_on_class(beta, lambda) <= factorial(rest) * xi_two_row(rest, lambda);
      }
    rep.add(make_record("characters.row_collapse", {{"n", n}}, "xi_beta", "(n-beta_1)! xi_(beta_1,n-beta_1)", ok));
  }

  for (int n = 1; n <= std::min(max_n, 12); ++n) {
    const PartitionTable table(n);
    bool ok = true;
    for (const auto &a : table)
      for (const auto &b : table) {
        const bool ab = dominates(a, b), ba = dominates(b, a);
        if (ab && ba && !(a == b))
          ok = false;
        if (!ab)
          continue;
        for (const auto &c : table)
          if (dominates(b, c) && !dominates(a, c))
            ok = false;
      }
    for (const auto &a : table)
      ok &= dominates(a, a);
    rep.add(make_record("core.dominance_partial_order", {{"n", n}}, "reflexive, antisymmetric, transitive", true, ok));
  }
}

// -------------------------------------------------------------- spectral

void spectral_suite(const SuiteOptions &o, VerificationReport &rep)
{
  const int max_n = cap(o, 7, 30);

  for (int n = 2; n <= max_n; ++n) {
    const PartitionTable table(n);
    const auto mu = eigenvalue_table(table);
    std::vector<std::vector<int>> prefix;
    for (const auto &p : table) {
      std::vector<int> ps(static_cast<std::size_t>(n));
      int acc = 0;
      for (int i = 0; i < n; ++i)
        ps[static_cast<std::size_t>(i)] = acc += p.part(static_cast<std::size_t>(i));
      prefix.push_back(std::move(ps));
    }
    bool monotone = true;
    Json bad = nullptr;
    for (std::size_t b = 0; b < table.size(); ++b)
      for (std::size_t a = 0; a < table.size(); ++a) {
        bool dom = true;
        for (int i = 0; i < n && dom; ++i)
          dom = prefix[b][static_cast<std::size_t>(i)] >= prefix[a][static_cast<std::size_t>(i)];
        if (dom && mu.mu[b] > mu.mu[a] && monotone) {
          monotone = false;
          bad = {{"beta", table[b].to_string()}, {"alpha", table[a].to_string()}};
        }
      }
    rep.add(make_record("spectral.dominance_monotone", {{"n", n}}, "mu_beta", "mu_alpha", monotone, bad));

    const auto second = *std::min_element(mu.mu.begin() + 1, mu.mu.end());
    rep.add(make_record("spectral.mu2_equals_n", {{"n", n}}, std::to_string(second), std::to_string(n),
                        second == n && mu.mu[0] == 0));

    bool two_row = true;
    for (int t = 0; 2 * t <= n; ++t) {
      const Partition shape = t ? Partition({n - t, t}) : Partition({n});
      two_row &= two_row_eigenvalue(t, n) == laplacian_eigenvalue(shape);
    }
    rep.add(make_record("spectral.two_row_formula", {{"n", n}}, "tn - t^2 + t", "mu_(n-t,t)", two_row));
  }

  for (int n = 2; n <= std::min(max_n, 8); ++n) {
    const CharacterTable chars(n);
    const auto mu = eigenvalue_table(chars.partitions());
    bool ok = true;
    Json bad = nullptr;
    for (std::size_t a = 0; a < chars.size(); ++a)
      if (!verify_eigenvector(chars.partitions(), chars.row(a), mu.mu[a]) && ok) {
        ok = false;
        bad = chars.partitions()[a].to_string();
      }
    rep.add(make_record("spectral.eigenvector", {{"n", n}}, "L chi_alpha", "mu_alpha chi_alpha", ok, bad));
  }

  for (int n = 2; n <= std::min(max_n, 8); ++n) {
    const PartitionTable table(n);
    const auto matrix = interaction_matrix(table);
    const auto &graph = TranspositionGraph::of(n);
    std::vector<std::int64_t> direct(table.size() * table.size(), 0);
    for (std::uint32_t v = 0; v < graph.vertex_count(); ++v)
      for (auto w : graph.neighbours(v))
        ++direct[graph.class_of(v) * table.size() + graph.class_of(w)];
    bool ok = true;
    for (std::size_t a = 0; a < table.size(); ++a)
      for (std::size_t b = 0; b < table.size(); ++b)
        ok &= (a == b ? 2 * matrix(a, a) : matrix(a, b)) == direct[a * table.size() + b];
    rep.add(make_record("sets.interaction_matrix_vs_enumeration", {{"n", n}}, "representative-based",
                        "all n! C(n,2) incident pairs", ok));
  }

  for (int n = 2; n <= std::min(max_n, 7); ++n) {
    const CharacterTable chars(n);
    const auto &table = chars.partitions();
    const auto matrix = interaction_matrix(table);
    const auto mu = eigenvalue_table(table);
    const BigInt order = chars.group_order();

    std::vector<std::uint64_t> masks;
    const std::uint64_t all = (std::uint64_t{1} << table.size()) - 1;
    const bool exhaustive = n <= 6;
    if (exhaustive) {
      for (std::uint64_t m = 0; m <= all; ++m)
        masks.push_back(m);
    } else {
      std::mt19937_64 rng(o.seed);
      for (int i = 0; i < 1000; ++i)
        masks.push_back(rng() & all);
    }

    std::uint64_t agree = 0;
    bool complement_ok = true, parseval_ok = true, diaconis_ok = true;
    Json bad = nullptr;
    for (auto m : masks) {
      const auto set = ConjClassSet::from_mask(table, m);
      const auto w = weights(set, chars);
      const BigInt spectral = spectral_boundary(w, mu);
      const BigInt via_matrix = boundary_via_classes(set, matrix);
      const BigInt brute = boundary_bruteforce(ExplicitSet::from_classes(set));
      if (spectral == via_matrix && via_matrix == brute)
        ++agree;
      else if (bad.is_null())
        bad = {{"classes", set.to_strings(table)},
               {"spectral", to_string(spectral)},
               {"matrix", to_string(via_matrix)},
               {"brute", to_string(brute)}};
      complement_ok &= spectral_boundary(set.complement(), chars) == spectral;
      BigInt energy = 0;
      for (const auto &x : w.W)
        energy += x * x;
      parseval_ok &= energy == order * set.size();
      diaconis_ok &= Rational(spectral) >= diaconis_lower_bound(set.size(), n);
    }
    Json params = {{"n", n}, {"subsets", masks.size()}, {"mode", exhaustive ? "exhaustive" : "sampled"}};
    if (!exhaustive)
      params["seed"] = std::to_string(o.seed);
    rep.add(make_record("spectral.three_way_agreement", params, std::to_string(agree), std::to_string(masks.size()),
                        agree == masks.size(), bad));
    rep.add(make_record("spectral.complement_symmetry", params, "|dA|", "|dA^c|", complement_ok));
    rep.add(make_record("spectral.parseval", params, "sum W^2", "n! |A|", parseval_ok));
    rep.add(make_record("spectral.diaconis_floor", params, "|dA|", "|A|(n!-|A|)/(n-1)!", diaconis_ok));
  }
}

// ---------------------------------------------------------------- bounds

std::vector<Rational> p_grid()
{
  std::vector<Rational> grid{Rational(1, 2), Rational(1, 3), Rational(1, 16), Rational(1, 27)};
  BigInt pow10 = 1;
  for (int j = 1; j <= 30; ++j) {
    pow10 *= 10;
    grid.emplace_back(BigInt(1), pow10);
  }
  for (int n = 3; n <= 24; ++n)
    grid.emplace_back(BigInt(1), factorial(n));
  return grid;
}

void bounds_suite(const SuiteOptions &o, VerificationReport &rep)
{
  const int max_n = cap(o, 9, 9);

  for (const auto &p : p_grid()) {
    const auto params = solve_K(p);
    const int n = minimal_degree_for(p);
    const auto ks = k_sandwich(params, n);
    rep.add(make_record("bounds.K_residual", {{"p", to_string(p)}}, params.residual, kSolverTolerance,
                        params.residual <= kSolverTolerance, {{"K", params.K}}));
    rep.add(make_record("bounds.K_sandwich", {{"p", to_string(p)}, {"n", n}}, Json::array({ks.lower, ks.K}),
                        Json::array({ks.K, n}), ks.lower_holds && ks.upper_holds));

    for (int M : {3, 4, 5, 6, kDefaultM}) {
      const auto tp = tp_sandwich(solve_K(p, M), n);
      Json prm = {{"p", to_string(p)}, {"M", M}, {"n", n}, {"regime", tp.in_regime ? "K>=M" : "K<M"}};
      rep.add(make_record("bounds.t_p_upper", prm, tp.t_p, tp.upper, tp.upper_holds));
      // below K = M the floor can vanish; the inequality is only claimed for K >= M
      rep.add(make_record("bounds.t_p_lower", prm, tp.lower, tp.t_p, tp.lower_holds, nullptr, tp.in_regime));
    }
  }

  for (const auto &p : p_grid()) {
    std::int64_t previous = std::numeric_limits<std::int64_t>::max();
    bool monotone = true;
    double worst = 0;
    for (int i = 1; i <= 8; ++i) {
      const auto kp = solve_kappa(p, i);
      monotone &= kp.k <= previous;
      previous = kp.k;
      worst = std::max(worst, kp.residual);
    }
    rep.add(make_record("bounds.kappa_monotone", {{"p", to_string(p)}}, "k_p(i)", "non-increasing",
                        monotone && worst <= kSolverTolerance, {{"max_residual", worst}}));
  }

  for (int M = 3; M <= 6; ++M) {
    const int k0 = static_cast<int>(std::ceil(std::exp(static_cast<double>(M))));
    std::size_t tested = 0, held = 0;
    Json bad = nullptr;
    double tightest = std::numeric_limits<double>::infinity();
    for (int k = k0; k <= k0 + 60; ++k)
      for (int s = 1; M * s <= k; ++s) {
        const auto r = moment_tail_check(s, k, M);
        ++tested;
        held += r.holds;
        tightest = std::min(tightest, r.log_rhs - r.log_lhs_upper);
        if (!r.holds && bad.is_null())
          bad = {{"s", s}, {"k", k}};
      }
    rep.add(make_record("bounds.moment_tail", {{"M", M}, {"k_range", Json::array({k0, k0 + 60})}}, held, tested,
                        held == tested, bad.is_null() ? Json{{"min_log_margin", tightest}} : bad));
  }

  for (int n = 2; n <= max_n; ++n) {
    const PartitionTable table(n);
    bool ok = true;
    Json bad = nullptr;
    for (int s = 1; s <= std::min(4, n / 2); ++s)
      for (const auto &lambda : table)
        if (!jensen_chain_check(lambda, s) && ok) {
          ok = false;
          bad = {{"lambda", lambda.to_string()}, {"s", s}};
        }
    rep.add(make_record("bounds.jensen_chain", {{"n", n}}, "xi <= (sum C_i)^s", "<= s^(s-1) sum C_i^s", ok, bad));
  }

  for (int n = 1; n <= std::min(max_n, 6); ++n) {
    const PartitionTable table(n);
    bool ok = true;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << table.size()); ++m) {
      const auto set = ConjClassSet::from_mask(table, m);
      Rational expect(set.size(), factorial(n));
      expect.canonicalize();
      ok &= fixed_subset_average(set, table, 0) == expect;
    }
    rep.add(make_record("bounds.subset_average_s0", {{"n", n}}, "fixed_subset_average(A,0)", "|A|/n!", ok));
  }

  // Headline inequality: LHS <= K^{-2K(1-7/M)} once s < t_p. That needs
  // p <= 18^-36 at M = 18, so at desk scale only the values are reported.
  for (int n = 4; n <= std::min(max_n, 8); ++n) {
    const PartitionTable table(n);
    for (int r = 1; r <= n - 2; ++r) {
      const auto set = make_A_s(table, r);
      const Rational p = Rational(set.size()) / factorial(n);
      if (p > Rational(1, 2))
        continue;
      const auto params = solve_K(p);
      const double rhs = std::exp(-2.0 * params.K * (1.0 - 7.0 / params.M) * std::log(params.K));
      for (int s = 1; 2 * s <= n; ++s) {
        const double lhs = fixed_subset_average(set, table, s).get_d();
        rep.add(make_record("bounds.subset_average_bound",
                            {{"n", n}, {"set", "A_" + std::to_string(r)}, {"s", s}, {"p", to_string(p)},
                             {"precondition_met", s < params.t_p}},
                            lhs, rhs, lhs <= rhs, nullptr, false));
      }
    }
  }

  for (int n = 1; n <= max_n; ++n) {
    const PartitionTable table(n);
    for (const auto &alpha : table) {
      if (n - alpha.first() > kMaxWBoundU)
        continue;
      const auto w = w_bound_ingredients(alpha);
      rep.add(make_record("bounds.w_bound_ingredients", {{"alpha", alpha.to_string()}},
                          std::to_string(w.abs_coefficient_sum), exact_json(w.coefficient_bound), w.all_hold(),
                          {{"coefficient_bound", w.coefficient_bound_holds}, {"boundchi", w.boundchi_holds}, {"collapse", w.collapse_holds}}));
    }
  }

  for (int n = 2; n <= std::min(max_n, 7); ++n) {
    const auto r = isoperimetric_ratio(n, o.workers);
    const PartitionTable table(n);
    Json hist = Json::array();
    for (const auto &b : r.histogram)
      hist.push_back({{"lo", b.lo}, {"hi", b.hi}, {"count", b.count}});
    rep.add(make_record("bounds.isoperimetric_ratio", {{"n", n}, {"sets", r.sets}}, r.min_ratio, 0,
                        r.all_positive && r.diaconis_violations == 0 && r.min_ratio > 0,
                        {{"argmin", ConjClassSet::from_mask(table, r.argmin_mask).to_strings(table)},
                         {"size", r.argmin_size},
                         {"boundary", r.argmin_boundary},
                         {"histogram", hist}}));
  }
}

// -------------------------------------------------------------- appendix

void appendix_suite(const SuiteOptions &o, VerificationReport &rep)
{
  const int max_n = cap(o, 7, 8);

  for (int n = 1; n <= max_n; ++n) {
    const auto profile = lex_segment_profile(n);
    const auto order = factorial_u64(n);
    std::uint64_t held = 0;
    Json bad = nullptr;
    for (std::uint64_t k = 1; k <= order; ++k) {
      const auto bound = appendix_bound(n, BigInt(static_cast<unsigned long>(k)));
      if (Rational(profile[k]) <= bound.bound)
        ++held;
      else if (bad.is_null())
        bad = {{"k", k}, {"boundary", profile[k]}, {"bound", to_string(bound.bound)}};
    }
    rep.add(make_record("appendix.lex_segment_bound", {{"n", n}}, held, order, held == order, bad));

    // The segment of size (n-t)! fixes [t] pointwise. Each member keeps the
    // C(n-t,2) transpositions inside the free block, so the boundary is
    // (C(n,2) - C(n-t,2)) (n-t)!, which is at most t(n-1)(n-t)! with equality
    // only for t <= 1.
    bool stabilizers = true, simple_upper = true, simple_exact = true;
    for (int t = 0; t <= n; ++t) {
      const auto k = static_cast<std::int64_t>(factorial_u64(n - t));
      const std::int64_t per = n * (n - 1) / 2 - (n - t) * (n - t - 1) / 2;
      const std::int64_t simple = static_cast<std::int64_t>(t) * (n - 1) * k;
      stabilizers &= profile[static_cast<std::size_t>(k)] == per * k;
      simple_upper &= profile[static_cast<std::size_t>(k)] <= simple;
      simple_exact &= profile[static_cast<std::size_t>(k)] == simple;
    }
    rep.add(make_record("appendix.stabilizer_boundary", {{"n", n}}, "|dC_{(n-t)!}|", "(C(n,2)-C(n-t,2))(n-t)!",
                        stabilizers));
    rep.add(make_record("appendix.stabilizer_simple_upper", {{"n", n}}, "|dC_{(n-t)!}|", "t(n-1)(n-t)!",
                        simple_upper));
    rep.add(make_record("appendix.stabilizer_simple_exact", {{"n", n}}, "|dC_{(n-t)!}|", "t(n-1)(n-t)!",
                        simple_exact, nullptr, false));

    bool equality = true;
    const auto prev = factorial_u64(n - 1);
    for (std::uint64_t c = 0; c <= static_cast<std::uint64_t>(n); ++c) {
      const auto k = c * prev;
      equality &= Rational(profile[k]) == diaconis_lower_bound(BigInt(static_cast<unsigned long>(k)), n);
    }
    rep.add(make_record("appendix.diaconis_equality", {{"n", n}}, "|d{sigma(1)<=c}|", "|A|(n!-|A|)/(n-1)!", equality));

    if (n <= 6) {
      bool direct = true;
      for (std::uint64_t k = 0; k <= order; k += std::max<std::uint64_t>(1, order / 37))
        direct &= lex_segment_boundary(n, k) == profile[k];
      rep.add(make_record("appendix.profile_vs_direct", {{"n", n}}, "incremental", "direct", direct));
    }
  }

  for (int n = 2; n <= std::min(max_n, 8); ++n) {
    const PartitionTable table(n);
    const auto matrix = interaction_matrix(table);
    for (int s = 1; s <= n; ++s) {
      const auto a = make_A_s(table, s);
      const BigInt b = boundary_via_classes(a, matrix);
      const BigInt bound = BigInt((s + 1) * (n - 1)) * a.size();
      rep.add(make_record("sets.A_s_boundary", {{"n", n}, {"s", s}}, exact_json(b), exact_json(bound), b <= bound));
    }
    for (int k = 1; k <= n; ++k) {
      if (n % k)
        continue;
      const auto set = make_block_fixing(n, k);
      const BigInt b = boundary_bruteforce(set);
      const BigInt bound = BigInt(k * (n - 1)) * static_cast<unsigned long>(set.size());
      rep.add(make_record("sets.block_fixing_boundary", {{"n", n}, {"k", k}}, exact_json(b), exact_json(bound),
                          b <= bound));
    }
  }
}

// ----------------------------------------------------------- conjectures

void conjectures_suite(const SuiteOptions &o, VerificationReport &rep)
{
  const int max_n = cap(o, 6, kMaxOptimizerN);

  for (int n = 1; n <= max_n; ++n) {
    const auto profile = xi_profile(n, o.workers);
    const auto order = static_cast<std::int64_t>(factorial_u64(n));
    std::vector<std::int64_t> by_k(static_cast<std::size_t>(order) + 1, -1);
    for (const auto &r : profile)
      by_k[static_cast<std::size_t>(r.k)] = r.min_boundary;
    bool symmetric = true;
    for (std::int64_t k = 0; k <= order; ++k)
      symmetric &= by_k[static_cast<std::size_t>(k)] == by_k[static_cast<std::size_t>(order - k)];
    rep.add(make_record("optimizer.complement_symmetry", {{"n", n}, {"achievable", profile.size()}}, "Xi_n(k)",
                        "Xi_n(n!-k)", symmetric));

    const auto conclusion = conclusion_conjecture_check(n, o.workers);
    rep.add(make_record("optimizer.diaconis_floor", {{"n", n}}, "Xi_n(k)", "|A|(n!-|A|)/(n-1)!",
                        conclusion.diaconis_floor_holds));
    Json violations = Json::array();
    std::size_t ambiguous = 0;
    for (const auto &e : conclusion.entries) {
      ambiguous += e.ambiguous;
      if (!e.holds_every_reading)
        violations.push_back({{"k", e.k}, {"xi", e.xi}, {"s", e.candidate_s}, {"bound", e.conjectured_bound}});
    }
    rep.add(make_record("conjecture.conclusion", {{"n", n}, {"achievable", conclusion.entries.size()},
                                                  {"ambiguous_brackets", ambiguous},
                                                  {"unachievable", conclusion.unachievable.size()}},
                        conclusion.violations_every_reading, conclusion.violations_some_reading,
                        conclusion.violations_some_reading == 0, violations, false));
  }

  for (int n = 1; n <= std::min(max_n, kMaxBenEfraimN); ++n) {
    const auto r = ben_efraim_check(n);
    rep.add(make_record("conjecture.ben_efraim", {{"n", n}, {"subsets", r.subsets}}, r.min_profile, r.lex_profile,
                        r.conjecture_holds, r.violations, false));
    rep.add(make_record("optimizer.ben_efraim_diaconis_equality", {{"n", n}}, "min |dA| at c(n-1)!",
                        "c(n! - c(n-1)!)", r.diaconis_equalities_hold));
  }
}

} // namespace

const std::vector<std::string> &suite_names()
{
  static const std::vector<std::string> names{"spectral", "characters", "census", "bounds", "appendix", "conjectures"};
  return names;
}

VerificationReport run_suite(std::string_view name, const SuiteOptions &options)
{
  VerificationReport rep{std::string(name)};
  if (name == "spectral")
    spectral_suite(options, rep);
  else if (name == "characters")
    characters_suite(options, rep);
  else if (name == "census")
    census_suite(options, rep);
  else if (name == "bounds")
    bounds_suite(options, rep);
  else if (name == "appendix")
    appendix_suite(options, rep);
  else if (name == "conjectures")
    conjectures_suite(options, rep);
  else
    throw std::invalid_argument("unknown suite: " + std::string(name));
  return rep;
}

} // namespace symiso
