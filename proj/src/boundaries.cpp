#include "symiso/boundaries.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>

namespace symiso {

namespace {

void require_explicit_n(int n, const char *what)
{
  if (n < 1 || n > kMaxExplicitN)
    throw std::out_of_range(std::string(what) + ": n must lie in [1, 8], got " + std::to_string(n));
}

} // namespace

TranspositionGraph::TranspositionGraph(int n) : n_(n), degree_(n * (n - 1) / 2)
{
  require_explicit_n(n, "TranspositionGraph");
  const PartitionTable table(n);
  const auto count = static_cast<std::size_t>(factorial_u64(n));
  adjacency_.resize(count * static_cast<std::size_t>(degree_));
  class_of_.resize(count);

  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::size_t rank = 0;
  do {
    class_of_[rank] = static_cast<std::uint16_t>(table.index_of(cycle_type(img)));
    std::size_t e = rank * static_cast<std::size_t>(degree_);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        std::swap(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(j)]);
        adjacency_[e++] = static_cast<std::uint32_t>(perm_rank_lex(img));
        std::swap(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(j)]);
      }
    ++rank;
  } while (std::next_permutation(img.begin(), img.end()));
}

const TranspositionGraph &TranspositionGraph::of(int n)
{
  require_explicit_n(n, "TranspositionGraph");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<TranspositionGraph>> cache;
  std::lock_guard lock(mutex);
  auto &slot = cache[n];
  if (!slot)
    slot.reset(new TranspositionGraph(n));
  return *slot;
}

ExplicitSet::ExplicitSet(int n, std::vector<std::uint64_t> ranks) : n_(n), ranks_(std::move(ranks))
{
  if (n < 0 || n > kMaxRankN)
    throw std::out_of_range("ExplicitSet: n must lie in [0, 20]");
  std::sort(ranks_.begin(), ranks_.end());
  if (std::adjacent_find(ranks_.begin(), ranks_.end()) != ranks_.end())
    throw std::invalid_argument("ExplicitSet: duplicate permutation");
  if (!ranks_.empty() && ranks_.back() >= factorial_u64(n))
    throw std::out_of_range("ExplicitSet: rank exceeds n! - 1");
}

ExplicitSet ExplicitSet::from_permutations(int n, std::span<const PermWord> perms)
{
  std::vector<std::uint64_t> ranks;
  ranks.reserve(perms.size());
  for (const auto &p : perms) {
    if (p.n() != n)
      throw std::invalid_argument("ExplicitSet: degree mismatch");
    ranks.push_back(perm_rank_lex(p));
  }
  return ExplicitSet(n, std::move(ranks));
}

ExplicitSet ExplicitSet::from_classes(const ConjClassSet &set)
{
  const auto &graph = TranspositionGraph::of(set.n());
  std::vector<std::uint64_t> ranks;
  for (std::uint32_t r = 0; r < graph.vertex_count(); ++r)
    if (set.contains(graph.class_of(r)))
      ranks.push_back(r);
  return ExplicitSet(set.n(), std::move(ranks));
}

bool ExplicitSet::contains_rank(std::uint64_t r) const { return std::binary_search(ranks_.begin(), ranks_.end(), r); }

bool ExplicitSet::contains(const PermWord &sigma) const
{
  return sigma.n() == n_ && contains_rank(perm_rank_lex(sigma));
}

BigInt boundary_bruteforce(const ExplicitSet &set)
{
  const auto &graph = TranspositionGraph::of(set.n());
  std::vector<char> member(graph.vertex_count(), 0);
  for (auto r : set.ranks())
    member[r] = 1;
  std::int64_t leaving = 0;
  for (auto r : set.ranks())
    for (auto nb : graph.neighbours(static_cast<std::uint32_t>(r)))
      leaving += !member[nb];
  return BigInt(static_cast<long>(leaving));
}

ExplicitSet make_block_fixing(int n, int k)
{
  require_explicit_n(n, "make_block_fixing");
  if (k < 1 || n % k != 0)
    throw std::invalid_argument("make_block_fixing: k must divide n");
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<std::uint64_t> ranks;
  std::uint64_t rank = 0;
  do {
    for (int block = 0; block < n / k; ++block) {
      bool fixed = true;
      for (int x = block * k; x < (block + 1) * k && fixed; ++x)
        fixed = img[static_cast<std::size_t>(x)] == x + 1;
      if (fixed) {
        ranks.push_back(rank);
        break;
      }
    }
    ++rank;
  } while (std::next_permutation(img.begin(), img.end()));
  return ExplicitSet(n, std::move(ranks));
}

ExplicitSet lex_segment(int n, std::uint64_t k)
{
  require_explicit_n(n, "lex_segment");
  if (k > factorial_u64(n))
    throw std::out_of_range("lex_segment: k exceeds n!");
  std::vector<std::uint64_t> ranks(k);
  std::iota(ranks.begin(), ranks.end(), std::uint64_t{0});
  return ExplicitSet(n, std::move(ranks));
}

BigInt lex_segment_boundary(int n, std::uint64_t k)
{
  require_explicit_n(n, "lex_segment_boundary");
  if (k > factorial_u64(n))
    throw std::out_of_range("lex_segment_boundary: k exceeds n!");
  // membership of a neighbour is just "rank < k"
  std::int64_t leaving = 0;
  for (std::uint64_t r = 0; r < k; ++r) {
    std::vector<int> img = perm_unrank_lex(n, r).images();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        std::swap(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(j)]);
        leaving += perm_rank_lex(img) >= k;
        std::swap(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(j)]);
      }
  }
  return BigInt(static_cast<long>(leaving));
}

std::vector<std::int64_t> lex_segment_profile(int n)
{
  const auto &graph = TranspositionGraph::of(n);
  std::vector<std::int64_t> profile(static_cast<std::size_t>(graph.vertex_count()) + 1, 0);
  for (std::uint32_t r = 0; r < graph.vertex_count(); ++r) {
    std::int64_t inside = 0;
    for (auto nb : graph.neighbours(r))
      inside += nb < r;
    profile[r + 1] = profile[r] + graph.degree() - 2 * inside;
  }
  return profile;
}

AppendixBound appendix_bound(int n, const BigInt &k)
{
  if (n < 1)
    throw std::invalid_argument("appendix_bound: n must be positive");
  if (k < 1 || k > factorial(static_cast<unsigned>(n)))
    throw std::out_of_range("appendix_bound: need 1 <= k <= n!");
  int t = 0;
  while (t + 1 <= n - 1 && k <= factorial(static_cast<unsigned>(n - t - 1)))
    ++t;
  // (t + 3/2)(n - 1) k = (2t + 3)(n - 1) k / 2
  Rational bound(BigInt(2 * t + 3) * BigInt(n - 1) * k, 2);
  bound.canonicalize();
  return {t, bound};
}

} // namespace symiso
