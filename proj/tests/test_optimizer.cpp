#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "symiso/class_set.hpp"
#include "symiso/optimizer.hpp"
#include "symiso/permutation.hpp"

using namespace symiso;

namespace {

// Straightforward enumeration: every class mask, boundary from explicit
// vertices of the oracle graph.
std::map<std::int64_t, std::int64_t> xi_oracle(int n)
{
  const PartitionTable table(n);
  const auto g = oracle::transposition_graph(n);
  std::vector<std::size_t> cls;
  for (const auto &p : g.perms)
    cls.push_back(table.index_of(Partition(oracle::cycle_type(p))));
  std::vector<std::int64_t> class_count(table.size(), 0);
  for (auto c : cls)
    ++class_count[c];
  std::map<std::int64_t, std::int64_t> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << table.size()); ++mask) {
    std::vector<bool> in;
    std::int64_t size = 0;
    for (auto c : cls)
      in.push_back(mask >> c & 1);
    for (std::size_t c = 0; c < table.size(); ++c)
      if (mask >> c & 1)
        size += class_count[c];
    const auto b = oracle::boundary(g, in);
    auto it = best.find(size);
    if (it == best.end() || b < it->second)
      best[size] = b;
  }
  return best;
}

bool lex_less(std::uint64_t a, std::uint64_t b)
{
  // first differing class index; the set without it is smaller
  for (int i = 0; i < 64; ++i)
    if ((a >> i & 1) != (b >> i & 1))
      return !(a >> i & 1);
  return false;
}

} // namespace

TEST_CASE("xi_min examples")
{
  for (int n = 2; n <= 7; ++n) {
    const auto one = xi_min(n, 1);
    REQUIRE(one.achievable);
    CHECK(one.min_boundary == n * (n - 1) / 2);
    const PartitionTable table(n);
    CHECK(one.witness->to_strings(table) ==
          std::vector<std::string>{Partition(std::vector<int>(static_cast<std::size_t>(n), 1)).to_string()});
    const auto all = xi_min(n, static_cast<std::int64_t>(factorial_u64(n)));
    CHECK(all.min_boundary == 0);
  }
  CHECK_FALSE(xi_min(4, 2).achievable);
  CHECK_FALSE(xi_min(4, 2).witness);
  CHECK_THROWS_AS(xi_min(4, 25), std::out_of_range);
  CHECK_THROWS_AS(xi_min(9, 1), std::out_of_range);
}

TEST_CASE("xi profile matches straightforward enumeration, n <= 6")
{
  for (int n = 1; n <= 6; ++n) {
    const auto expect = xi_oracle(n);
    const auto profile = xi_profile(n, 3);
    REQUIRE(profile.size() == expect.size());
    for (const auto &r : profile) {
      const auto b = expect.at(r.k);
      CHECK(r.min_boundary == b);
      CHECK(r.witness->size() == r.k);
      CHECK(boundary_via_classes(*r.witness, interaction_matrix(PartitionTable(n))) == b);
    }
  }
}

TEST_CASE("xi witness is lex-least among minimizers")
{
  for (int n = 2; n <= 6; ++n) {
    const PartitionTable table(n);
    const auto m = interaction_matrix(table);
    std::map<std::int64_t, std::vector<std::uint64_t>> minimizers;
    std::map<std::int64_t, std::int64_t> best;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << table.size()); ++mask) {
      const auto s = ConjClassSet::from_mask(table, mask);
      const auto k = to_int64(s.size());
      const auto b = to_int64(boundary_via_classes(s, m));
      if (!best.count(k) || b < best[k]) {
        best[k] = b;
        minimizers[k] = {mask};
      } else if (b == best[k]) {
        minimizers[k].push_back(mask);
      }
    }
    for (const auto &r : xi_profile(n)) {
      auto lex_min = minimizers[r.k].front();
      for (auto mask : minimizers[r.k])
        if (lex_less(mask, lex_min))
          lex_min = mask;
      CHECK(r.witness->mask() == lex_min);
    }
  }
}

TEST_CASE("profile is deterministic across worker counts and symmetric")
{
  for (int n = 5; n <= 7; ++n) {
    const auto a = xi_profile(n, 1), b = xi_profile(n, 4);
    REQUIRE(a.size() == b.size());
    std::map<std::int64_t, std::int64_t> by_k;
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].k == b[i].k);
      CHECK(a[i].min_boundary == b[i].min_boundary);
      CHECK(a[i].witness->mask() == b[i].witness->mask());
      by_k[a[i].k] = a[i].min_boundary;
    }
    const auto order = static_cast<std::int64_t>(factorial_u64(n));
    for (const auto &[k, xi] : by_k) {
      REQUIRE(by_k.count(order - k));
      CHECK(by_k[order - k] == xi);
    }
  }
}

TEST_CASE("conclusion conjecture report")
{
  for (int n = 2; n <= 7; ++n) {
    const auto r = conclusion_conjecture_check(n, 2);
    CHECK(r.diaconis_floor_holds);
    CHECK(r.a_sizes.size() == static_cast<std::size_t>(n) + 1);
    for (int s = 0; s <= n; ++s) {
      const auto k = r.a_sizes[static_cast<std::size_t>(s)];
      const auto xi = xi_min(n, k);
      CHECK(xi.min_boundary <= r.a_boundaries[static_cast<std::size_t>(s)]);
    }
    for (const auto &e : r.entries)
      CHECK(e.diaconis_floor_holds);
    for (auto k : r.unachievable)
      CHECK_FALSE(xi_min(n, k).achievable);
  }
}

TEST_CASE("Ben Efraim exhaustive check")
{
  const auto r3 = ben_efraim_check(3);
  CHECK(r3.subsets == 64);
  CHECK(r3.conjecture_holds);
  CHECK(r3.diaconis_equalities_hold);
  CHECK(r3.min_profile == std::vector<std::int64_t>{0, 3, 4, 5, 4, 3, 0});

  const auto g = oracle::transposition_graph(3);
  for (std::size_t k = 0; k <= 6; ++k) {
    std::int64_t best = -1;
    for (std::uint32_t m = 0; m < 64; ++m) {
      if (static_cast<std::size_t>(__builtin_popcount(m)) != k)
        continue;
      std::vector<bool> in;
      for (int v = 0; v < 6; ++v)
        in.push_back(m >> v & 1);
      const auto b = oracle::boundary(g, in);
      if (best < 0 || b < best)
        best = b;
    }
    CHECK(r3.min_profile[k] == best);
  }
  CHECK_THROWS_AS(ben_efraim_check(5), std::out_of_range);
}
