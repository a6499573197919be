#include <doctest.h>

#include "oracles.hpp"
#include "symiso/boundaries.hpp"
#include "symiso/class_set.hpp"
#include "symiso/spectral.hpp"

using namespace symiso;

TEST_CASE("eigenvalue examples")
{
  for (int n = 2; n <= 30; ++n) {
    CHECK(laplacian_eigenvalue(Partition({n})) == 0);
    CHECK(laplacian_eigenvalue(Partition({n - 1, 1})) == n);
    std::vector<int> column(static_cast<std::size_t>(n), 1);
    CHECK(laplacian_eigenvalue(Partition(column)) == n * (n - 1));
  }
  CHECK(laplacian_eigenvalue(Partition({3, 2, 2})) == 22);
  CHECK(two_row_eigenvalue(0, 7) == 0);
  CHECK(two_row_eigenvalue(1, 7) == 7);
  CHECK(two_row_eigenvalue(2, 7) == 12);
  CHECK(laplacian_eigenvalue(Partition({5, 2})) == 12);
}

TEST_CASE("eigenvalue equals C(n,2) minus sum of contents")
{
  for (int n = 1; n <= 15; ++n)
    for (const auto &a : PartitionTable(n)) {
      std::int64_t contents = 0;
      for (int i = 0; i < a.length(); ++i)
        for (int j = 0; j < a.part(static_cast<std::size_t>(i)); ++j)
          contents += j - i;
      CHECK(laplacian_eigenvalue(a) == n * (n - 1) / 2 - contents);
    }
}

TEST_CASE("characters are Laplacian eigenvectors")
{
  for (int n = 2; n <= 8; ++n) {
    const CharacterTable t(n);
    const auto mu = eigenvalue_table(t.partitions());
    for (std::size_t a = 0; a < t.size(); ++a) {
      CHECK(verify_eigenvector(t.partitions(), t.row(a), mu.mu[a]));
      CHECK(verify_eigenvector(t.partitions()[a]));
      if (mu.mu[a] != 0)
        CHECK_FALSE(verify_eigenvector(t.partitions(), t.row(a), mu.mu[a] + 1));
    }
    ClassFunction bent = t.row(t.size() - 2);
    bent[0] += 1;
    CHECK_FALSE(verify_eigenvector(t.partitions(), bent, mu.mu[t.size() - 2]));
  }
}

TEST_CASE("weights")
{
  const CharacterTable t(4);
  const auto all = weights(ConjClassSet::all(t.partitions()), t);
  CHECK(all.W[0] == 24);
  for (std::size_t a = 1; a < t.size(); ++a)
    CHECK(all.W[a] == 0);
  for (const auto &w : weights(ConjClassSet::none(t.partitions()), t).W)
    CHECK(w == 0);
  const auto id = weights(ConjClassSet::parse(t.partitions(), "1+1+1+1"), t);
  for (std::size_t a = 0; a < t.size(); ++a)
    CHECK(id.W[a] == t.value(a, t.size() - 1));
  CHECK(id.w(0) == Rational(1, 24));
}

TEST_CASE("spectral boundary examples")
{
  for (int n = 2; n <= 9; ++n) {
    const CharacterTable t(n);
    CHECK(spectral_boundary(ConjClassSet::none(t.partitions()), t) == 0);
    CHECK(spectral_boundary(ConjClassSet::all(t.partitions()), t) == 0);
    const auto id = ConjClassSet::from_mask(t.partitions(), std::uint64_t{1} << (t.size() - 1));
    CHECK(spectral_boundary(id, t) == n * (n - 1) / 2);
  }
}

TEST_CASE("spectral boundary matches an independent graph oracle, n <= 5")
{
  for (int n = 2; n <= 5; ++n) {
    const auto g = oracle::transposition_graph(n);
    const CharacterTable t(n);
    const auto &table = t.partitions();
    std::vector<std::size_t> cls;
    for (const auto &p : g.perms)
      cls.push_back(table.index_of(Partition(oracle::cycle_type(p))));
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << table.size()); ++m) {
      std::vector<bool> in;
      for (auto c : cls)
        in.push_back(m >> c & 1);
      CHECK(spectral_boundary(ConjClassSet::from_mask(table, m), t) == oracle::boundary(g, in));
    }
  }
}

TEST_CASE("Diaconis floor")
{
  CHECK(diaconis_lower_bound(0, 5) == 0);
  for (int n = 2; n <= 8; ++n)
    CHECK(diaconis_lower_bound(factorial(n) / 2, n) == Rational(BigInt(n) * factorial(n)) / 4);
  CHECK(diaconis_lower_bound(12, 4) == 24);
}
