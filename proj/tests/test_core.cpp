#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "symiso/counting.hpp"
#include "symiso/exact.hpp"
#include "symiso/partition.hpp"
#include "symiso/permutation.hpp"

using namespace symiso;

TEST_CASE("exact arithmetic helpers")
{
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  CHECK(to_string(factorial(25)) == "15511210043330985984000000");
  CHECK(binomial(10, 3) == 120);
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_int64(BigInt(-7)) == -7);
  CHECK_THROWS_AS(to_int64(factorial(30)), std::overflow_error);

  CHECK(parse_rational("1/16") == Rational(1, 16));
  CHECK(parse_rational("  3 ") == Rational(3));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("1e-3") == Rational(1, 1000));
  CHECK(parse_rational("2.5E2") == Rational(250));
  for (const char *bad : {"", "abc", "1/0", "1//2", "1e", "--1"})
    CHECK_THROWS_AS(parse_rational(bad), ParseError);

  CHECK(log2_of(Rational(1, 1024)) == doctest::Approx(-10.0));
  CHECK(ln_of(Rational(BigInt(1), factorial(200))) == doctest::Approx(-863.2319871924054));
}

TEST_CASE("partition enumeration matches compositions oracle")
{
  CHECK(PartitionTable(0).size() == 1);
  CHECK(PartitionTable(0)[0].length() == 0);
  for (int n = 0; n <= 12; ++n) {
    const PartitionTable table(n);
    const auto expect = oracle::partitions_by_compositions(n);
    REQUIRE(table.size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i)
      CHECK(table[i].parts() == expect[i]);
  }
  const auto p = oracle::partition_counts(40);
  for (int n = 0; n <= 40; ++n)
    CHECK(partitions_of(n).size() == p[static_cast<std::size_t>(n)]);
  CHECK(PartitionTable(8).size() == 22);
  CHECK(p[40] == 37338);
}

TEST_CASE("partition n=4 listing and lookup")
{
  const PartitionTable t(4);
  std::vector<std::string> names;
  for (const auto &l : t)
    names.push_back(l.to_string());
  CHECK(names == std::vector<std::string>{"4", "3+1", "2+2", "2+1+1", "1+1+1+1"});
  CHECK(t.index_of(Partition({2, 2})) == 2);
  CHECK_THROWS_AS(t.index_of(Partition({3, 2})), std::invalid_argument);
  CHECK_THROWS_AS(PartitionTable(41), std::out_of_range);
  CHECK_THROWS_AS(PartitionTable(-1), std::out_of_range);
}

TEST_CASE("partition validation and parsing")
{
  CHECK_THROWS(Partition({1, 2}));
  CHECK_THROWS(Partition({2, 0}));
  CHECK(Partition::from_unsorted({1, 3, 2}) == Partition({3, 2, 1}));
  CHECK(Partition::parse(" 3 + 2+2 ") == Partition({3, 2, 2}));
  CHECK(Partition::parse("0").n() == 0);
  for (const char *bad : {"3++1", "+3", "3+", "a", "3+-1", "3+0"})
    CHECK_THROWS_AS(Partition::parse(bad), ParseError);
  const Partition l({3, 2, 2, 1});
  CHECK(l.multiplicity(2) == 2);
  CHECK(l.part(10) == 0);
  CHECK(l.to_string() == "3+2+2+1");
}

TEST_CASE("dominance examples")
{
  for (int n = 3; n <= 9; ++n) {
    std::vector<int> hook(static_cast<std::size_t>(n - 1), 1);
    hook[0] = 2;
    CHECK(dominates(Partition({n - 1, 1}), Partition(hook)));
    for (const auto &a : PartitionTable(n))
      if (!(a == Partition({n})))
        CHECK(dominates(Partition({n - 1, 1}), a));
  }
  CHECK_FALSE(dominates(Partition({3, 3}), Partition({4, 1, 1})));
  CHECK(dominates(Partition({4, 1, 1}), Partition({3, 3})) == false);
  CHECK(dominates(Partition({4, 2}), Partition({3, 3})));
  CHECK(dominates(Partition({2, 2}), Partition({2, 2})));
  CHECK_THROWS_AS(dominates(Partition({2}), Partition({2, 1})), std::invalid_argument);
}

TEST_CASE("class sizes agree with enumeration of S_n")
{
  CHECK(class_size(Partition({1, 1, 1, 1})) == 1);
  CHECK(class_size(Partition({2, 1, 1})) == 6);
  for (int n = 1; n <= 8; ++n) {
    std::map<std::vector<int>, std::int64_t> count;
    for (const auto &p : oracle::all_perms(n))
      ++count[oracle::cycle_type(p)];
    BigInt total = 0;
    for (const auto &l : PartitionTable(n)) {
      CHECK(class_size(l) == count[l.parts()]);
      total += class_size(l);
    }
    CHECK(total == factorial(n));
  }
}

TEST_CASE("derangements")
{
  CHECK(derangement_count(0) == 1);
  CHECK(derangement_count(1) == 0);
  CHECK(derangement_count(4) == 9);
  for (int m = 1; m <= 8; ++m) {
    std::int64_t d = 0;
    for (const auto &p : oracle::all_perms(m))
      d += oracle::fixed_points(p) == 0;
    CHECK(derangement_count(m) == d);
  }
  for (int m = 2; m <= 12; ++m)
    CHECK(3 * derangement_count(m) >= factorial(m));
  CHECK_THROWS(derangement_count(-1));
}

TEST_CASE("Goncharov census against enumeration")
{
  CHECK(cycle_count_census(4, 1, 4) == 1);
  CHECK(cycle_count_census(4, 2, 1) == 6);
  for (int n = 3; n <= 8; ++n)
    CHECK(cycle_count_census(n, 1, n - 1) == 0);
  for (int n = 1; n <= 7; ++n) {
    const auto perms = oracle::all_perms(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 0; j <= n / i; ++j) {
        std::int64_t c = 0;
        for (const auto &p : perms) {
          const auto ct = oracle::cycle_type(p);
          c += std::count(ct.begin(), ct.end(), i) == j;
        }
        CHECK(cycle_count_census(n, i, j) == c);
      }
  }
  CHECK_THROWS(cycle_count_census(5, 2, 3));
}

TEST_CASE("permutation rank and unrank")
{
  CHECK(perm_unrank_lex(3, 0) == PermWord::identity(3));
  CHECK(perm_rank_lex(PermWord({1, 3, 2})) == 1);
  for (int n = 1; n <= 7; ++n) {
    const auto perms = oracle::all_perms(n);
    for (std::uint64_t r = 0; r < perms.size(); ++r) {
      CHECK(perm_unrank_lex(n, r).images() == perms[r]);
      CHECK(perm_rank_lex(PermWord(perms[r])) == r);
    }
  }
  CHECK_THROWS_AS(perm_unrank_lex(3, 6), std::out_of_range);
  CHECK(factorial_u64(20) == 2432902008176640000ULL);
  CHECK_THROWS_AS(factorial_u64(21), std::out_of_range);
}

TEST_CASE("rank/unrank round trip on random large permutations")
{
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 20);
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    std::shuffle(img.begin(), img.end(), rng);
    const PermWord p(img);
    CHECK(perm_unrank_lex(n, perm_rank_lex(p)) == p);
  }
}

TEST_CASE("cycle types and permutation algebra")
{
  CHECK(cycle_type(PermWord::identity(5)) == Partition({1, 1, 1, 1, 1}));
  CHECK(cycle_type(PermWord({2, 1, 4, 3})) == Partition({2, 2}));
  CHECK_THROWS(PermWord({1, 1, 2}));
  CHECK_THROWS(PermWord({0, 1}));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    std::vector<int> a(static_cast<std::size_t>(n)), b(a.size());
    std::iota(a.begin(), a.end(), 1);
    std::iota(b.begin(), b.end(), 1);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    const PermWord p(a), q(b);
    CHECK(p.compose(p.inverse()) == PermWord::identity(n));
    // conjugation preserves cycle type
    CHECK(cycle_type(q.compose(p).compose(q.inverse())) == cycle_type(p));
    CHECK(cycle_type(p).parts() == oracle::cycle_type(a));
    int weighted = 0;
    for (int len = 1; len <= n; ++len)
      weighted += len * cycle_count(p, len);
    CHECK(weighted == n);
  }

  for (int n = 1; n <= 8; ++n)
    for (const auto &l : PartitionTable(n))
      CHECK(cycle_type(class_representative(l)) == l);
}
