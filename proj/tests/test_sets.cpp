#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "symiso/boundaries.hpp"
#include "symiso/characters.hpp"
#include "symiso/class_set.hpp"
#include "symiso/counting.hpp"
#include "symiso/spectral.hpp"

using namespace symiso;

namespace {

std::vector<bool> membership(const oracle::Graph &g, const std::function<bool(const oracle::Perm &)> &pred)
{
  std::vector<bool> in;
  for (const auto &p : g.perms)
    in.push_back(pred(p));
  return in;
}

} // namespace

TEST_CASE("class set parsing and sizes")
{
  const PartitionTable t(4);
  const auto a = ConjClassSet::parse(t, " 2+1+1 ,3+1");
  CHECK(a.to_strings(t) == std::vector<std::string>{"3+1", "2+1+1"});
  CHECK(a.size() == 14);
  CHECK(a.complement().size() == 10);
  CHECK(ConjClassSet::from_mask(t, a.mask()) == a);
  CHECK(ConjClassSet::parse(t, "").size() == 0);
  CHECK_THROWS_AS(ConjClassSet::parse(t, "2+2,,3+1"), ParseError);
  CHECK_THROWS_AS(ConjClassSet::parse(t, "2+x"), ParseError);
  CHECK_THROWS_AS(ConjClassSet::parse(t, "3+2"), std::invalid_argument);
  CHECK_THROWS_AS(ConjClassSet::from_mask(t, 1u << 5), std::invalid_argument);
}

TEST_CASE("interaction matrix against full edge enumeration")
{
  for (int n = 2; n <= 6; ++n) {
    const PartitionTable table(n);
    const auto m = interaction_matrix(table);
    const auto g = oracle::transposition_graph(n);
    std::vector<std::size_t> cls;
    for (const auto &p : g.perms)
      cls.push_back(table.index_of(Partition(oracle::cycle_type(p))));
    std::vector<std::int64_t> edges(table.size() * table.size(), 0);
    for (std::size_t v = 0; v < g.perms.size(); ++v)
      for (auto w : g.adj[v])
        if (v < w)
          ++edges[cls[v] * table.size() + cls[w]];
    for (std::size_t a = 0; a < table.size(); ++a) {
      CHECK(m(a, a) == 0);
      for (std::size_t b = 0; b < table.size(); ++b) {
        CHECK(m(a, b) == m(b, a));
        if (a != b)
          CHECK(m(a, b) == edges[a * table.size() + b] + edges[b * table.size() + a]);
      }
      CHECK(m.external_degree(a) == class_size(table[a]) * (n * (n - 1) / 2));
    }
  }
}

TEST_CASE("three boundary methods agree on every class union, n <= 6")
{
  for (int n = 1; n <= 6; ++n) {
    const CharacterTable chars(n);
    const auto &table = chars.partitions();
    const auto matrix = interaction_matrix(table);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << table.size()); ++mask) {
      const auto set = ConjClassSet::from_mask(table, mask);
      const BigInt spectral = spectral_boundary(set, chars);
      CHECK(boundary_via_classes(set, matrix) == spectral);
      CHECK(boundary_bruteforce(ExplicitSet::from_classes(set)) == spectral);
    }
  }
}

TEST_CASE("brute-force boundary examples")
{
  const auto g = oracle::transposition_graph(4);
  CHECK(boundary_bruteforce(ExplicitSet(4, {0})) == 6);
  CHECK(boundary_bruteforce(lex_segment(4, 6)) == 18);
  CHECK(oracle::boundary(g, membership(g, [](const auto &p) { return p[0] == 1; })) == 18);
  CHECK(boundary_bruteforce(ExplicitSet(4, {})) == 0);

  for (int n = 2; n <= 7; ++n) {
    const PartitionTable table(n);
    const auto a1 = make_A_s(table, 1);
    CHECK(boundary_bruteforce(ExplicitSet::from_classes(a1)) == boundary_via_classes(a1, interaction_matrix(table)));
  }
}

TEST_CASE("brute-force boundary on random explicit sets vs oracle")
{
  std::mt19937_64 rng(5);
  for (int n = 3; n <= 5; ++n) {
    const auto g = oracle::transposition_graph(n);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<bool> in;
      std::vector<std::uint64_t> ranks;
      for (std::uint64_t r = 0; r < g.perms.size(); ++r) {
        in.push_back(rng() & 1);
        if (in.back())
          ranks.push_back(r);
      }
      CHECK(boundary_bruteforce(ExplicitSet(n, ranks)) == oracle::boundary(g, in));
    }
  }
}

TEST_CASE("A_s construction")
{
  for (int n = 1; n <= 8; ++n) {
    const PartitionTable table(n);
    CHECK(make_A_s(table, n).to_strings(table) == std::vector<std::string>{Partition(std::vector<int>(
                                                      static_cast<std::size_t>(n), 1)).to_string()});
    CHECK(make_A_s(table, n).size() == 1);
    CHECK(make_A_s(table, 0).size() == factorial(n));
    CHECK(make_A_s(table, 1).size() == factorial(n) - derangement_count(n));
  }
  CHECK(make_A_s(PartitionTable(4), 1).size() == 15);
  for (int n = 3; n <= 10; ++n) {
    const PartitionTable table(n);
    for (int s = 1; s <= n - 2; ++s) {
      const BigInt a = make_A_s(table, s).size();
      CHECK(3 * factorial(s) * a >= factorial(n));
      CHECK(factorial(s) * a <= factorial(n));
    }
  }
  CHECK_THROWS(make_A_s(PartitionTable(4), 5));
}

TEST_CASE("A_s boundary bound")
{
  for (int n = 2; n <= 8; ++n) {
    const PartitionTable table(n);
    const auto m = interaction_matrix(table);
    for (int s = 1; s <= n; ++s) {
      const auto a = make_A_s(table, s);
      CHECK(boundary_via_classes(a, m) <= BigInt((s + 1) * (n - 1)) * a.size());
    }
  }
}

TEST_CASE("block fixing sets")
{
  for (int n = 1; n <= 7; ++n) {
    const auto g = oracle::transposition_graph(n);
    const PartitionTable table(n);
    CHECK(make_block_fixing(n, n).ranks() == std::vector<std::uint64_t>{0});
    CHECK(make_block_fixing(n, 1).ranks() == ExplicitSet::from_classes(make_A_s(table, 1)).ranks());
    for (int k = 1; k <= n; ++k) {
      if (n % k)
        continue;
      const auto set = make_block_fixing(n, k);
      const auto in = membership(g, [&](const auto &p) {
        for (int b = 0; b < n / k; ++b) {
          bool fixed = true;
          for (int i = b * k; i < (b + 1) * k; ++i)
            fixed &= p[static_cast<std::size_t>(i)] == i + 1;
          if (fixed)
            return true;
        }
        return false;
      });
      CHECK(set.size() == static_cast<std::size_t>(std::count(in.begin(), in.end(), true)));
      CHECK(boundary_bruteforce(set) == oracle::boundary(g, in));
      CHECK(boundary_bruteforce(set) <= BigInt(k * (n - 1)) * static_cast<unsigned long>(set.size()));
    }
  }
  CHECK_THROWS(make_block_fixing(6, 4));
}

TEST_CASE("block fixing Bonferroni sandwich")
{
  for (int n = 4; n <= 8; ++n)
    for (int k = 2; 2 * k <= n; ++k) {
      if (n % k)
        continue;
      const BigInt a = static_cast<unsigned long>(make_block_fixing(n, k).size());
      const BigInt upper = BigInt(n / k) * factorial(n - k);
      const BigInt middle = upper - binomial(n / k, 2) * factorial(n - 2 * k);
      CHECK(Rational(BigInt(n) * factorial(n - k)) / (2 * k) < Rational(middle));
      CHECK(middle <= a);
      CHECK(a <= upper);
      CHECK(factorial(n - k) < a);
      CHECK(a <= factorial(n - k + 1));
    }
}

TEST_CASE("lex segments")
{
  CHECK(lex_segment_boundary(4, 0) == 0);
  CHECK(lex_segment_boundary(4, 6) == 18);
  CHECK(lex_segment_boundary(4, 12) == 24);
  for (int n = 1; n <= 6; ++n) {
    const auto g = oracle::transposition_graph(n);
    const auto profile = lex_segment_profile(n);
    REQUIRE(profile.size() == g.perms.size() + 1);
    std::vector<bool> in(g.perms.size(), false);
    CHECK(profile[0] == 0);
    for (std::size_t k = 1; k <= g.perms.size(); ++k) {
      in[k - 1] = true;
      const auto expect = oracle::boundary(g, in);
      CHECK(profile[k] == expect);
      CHECK(lex_segment_boundary(n, k) == expect);
    }
    // the segment of size (n-t)! fixes [t] pointwise
    for (int t = 0; t <= n; ++t) {
      const auto k = factorial_u64(n - t);
      const std::int64_t per_vertex = n * (n - 1) / 2 - (n - t) * (n - t - 1) / 2;
      CHECK(profile[k] == per_vertex * static_cast<std::int64_t>(k));
      CHECK(profile[k] <= static_cast<std::int64_t>(t) * (n - 1) * static_cast<std::int64_t>(k));
      if (t <= 1)
        CHECK(profile[k] == static_cast<std::int64_t>(t) * (n - 1) * static_cast<std::int64_t>(k));
    }
    for (int c = 0; c <= n; ++c) {
      const auto k = static_cast<std::uint64_t>(c) * factorial_u64(n - 1);
      CHECK(Rational(profile[k]) == diaconis_lower_bound(BigInt(static_cast<unsigned long>(k)), n));
    }
  }
}

TEST_CASE("appendix bound")
{
  const auto b = appendix_bound(4, 6);
  CHECK(b.t == 1);
  CHECK(b.bound == 45);
  for (int n = 2; n <= 8; ++n) {
    const auto one = appendix_bound(n, 1);
    CHECK(one.t == n - 1);
    CHECK(one.bound >= n * (n - 1) / 2);
    for (int t = 0; t < n; ++t) {
      const BigInt k = factorial(n - t);
      CHECK(appendix_bound(n, k).bound >= BigInt(t * (n - 1)) * k);
    }
  }
  for (int n = 1; n <= 7; ++n) {
    const auto profile = lex_segment_profile(n);
    for (std::uint64_t k = 1; k < profile.size(); ++k)
      CHECK(Rational(profile[k]) <= appendix_bound(n, BigInt(static_cast<unsigned long>(k))).bound);
  }
}
