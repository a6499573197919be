#ifndef SYMISO_BOUNDARIES_HPP
#define SYMISO_BOUNDARIES_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "symiso/class_set.hpp"
#include "symiso/permutation.hpp"

namespace symiso {

inline constexpr int kMaxExplicitN = 8;

/// The transposition graph T_n materialized over lex ranks, for brute-force
/// work at n <= 8. Vertex r is perm_unrank_lex(n, r); its neighbours are the
/// C(n,2) position swaps.
class TranspositionGraph {
public:
  /// Shared immutable instance; built once per n, thread-safe.
  static const TranspositionGraph &of(int n);

  int n() const noexcept { return n_; }
  std::uint32_t vertex_count() const noexcept { return static_cast<std::uint32_t>(class_of_.size()); }
  int degree() const noexcept { return degree_; }

  std::span<const std::uint32_t> neighbours(std::uint32_t rank) const
  {
    return {adjacency_.data() + static_cast<std::size_t>(rank) * static_cast<std::size_t>(degree_),
            static_cast<std::size_t>(degree_)};
  }

  /// PartitionTable(n) index of the cycle type of vertex `rank`.
  std::uint16_t class_of(std::uint32_t rank) const { return class_of_[rank]; }

private:
  explicit TranspositionGraph(int n);

  int n_;
  int degree_;
  std::vector<std::uint32_t> adjacency_;
  std::vector<std::uint16_t> class_of_;
};

/// An arbitrary subset of S_n held as sorted, distinct lex ranks.
class ExplicitSet {
public:
  ExplicitSet() = default;
  ExplicitSet(int n, std::vector<std::uint64_t> ranks);

  static ExplicitSet from_permutations(int n, std::span<const PermWord> perms);

  /// Every permutation whose cycle type lies in `set`. n <= 8.
  static ExplicitSet from_classes(const ConjClassSet &set);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return ranks_.size(); }
  const std::vector<std::uint64_t> &ranks() const noexcept { return ranks_; }

  bool contains_rank(std::uint64_t r) const;
  bool contains(const PermWord &sigma) const;

private:
  int n_ = 0;
  std::vector<std::uint64_t> ranks_;
};

/// Counts (sigma in S, transposition tau) with sigma tau outside S. Each
/// boundary edge has exactly one endpoint in S, so this is |dS|. n <= 8.
BigInt boundary_bruteforce(const ExplicitSet &set);

/// Permutations fixing pointwise at least one block
/// I_i = {(i-1)k+1, ..., ik}. Requires k | n and n <= 8.
ExplicitSet make_block_fixing(int n, int k);

/// The first k permutations in lexicographic order.
ExplicitSet lex_segment(int n, std::uint64_t k);

/// |dC| for C the lexicographic initial segment of size k. n <= 8.
BigInt lex_segment_boundary(int n, std::uint64_t k);

/// profile[k] = lex_segment_boundary(n, k) for every k in [0, n!], computed
/// incrementally. n <= 8.
std::vector<std::int64_t> lex_segment_profile(int n);

struct AppendixBound {
  int t = 0;
  Rational bound;
};

/// (t + 3/2)(n - 1) k where t is the largest t in [0, n-1] with
/// k <= (n-t)!; this matches the bracket (n-t-1)! < k <= (n-t)! whenever
/// that bracket is non-empty, and sends k = 1 to t = n - 1.
AppendixBound appendix_bound(int n, const BigInt &k);

} // namespace symiso

#endif // SYMISO_BOUNDARIES_HPP
