#ifndef SYMISO_PERMUTATION_HPP
#define SYMISO_PERMUTATION_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "symiso/partition.hpp"

namespace symiso {

/// A permutation of [n] in sequence notation (sigma(1), ..., sigma(n)),
/// 1-based values.
class PermWord {
public:
  PermWord() = default;

  /// Throws std::invalid_argument unless `images` is a bijection of [n].
  explicit PermWord(std::vector<int> images);

  static PermWord identity(int n);

  int n() const noexcept { return static_cast<int>(images_.size()); }

  /// sigma(i), 1-based.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int> &images() const noexcept { return images_; }

  /// (this * rhs)(i) = this(rhs(i)).
  PermWord compose(const PermWord &rhs) const;
  PermWord inverse() const;

  /// sigma * (i j): the sequence with positions i and j exchanged (1-based).
  PermWord swap_positions(int i, int j) const;

  friend bool operator==(const PermWord &, const PermWord &) = default;

private:
  std::vector<int> images_;
};

inline constexpr int kMaxRankN = 20;

/// Position of sigma in the lexicographic order of sequences; the identity
/// has rank 0. Requires n <= 20.
std::uint64_t perm_rank_lex(const PermWord &sigma);
std::uint64_t perm_rank_lex(std::span<const int> images);

/// Inverse of perm_rank_lex. Throws std::out_of_range unless r < n!.
PermWord perm_unrank_lex(int n, std::uint64_t r);

/// n! as a 64-bit value, n <= 20.
std::uint64_t factorial_u64(int n);

Partition cycle_type(const PermWord &sigma);
Partition cycle_type(std::span<const int> images);

/// C_i(sigma): number of cycles of length i.
int cycle_count(const PermWord &sigma, int length);

/// A fixed permutation of cycle type lambda: cycles on consecutive points,
/// longest first.
PermWord class_representative(const Partition &lambda);

} // namespace symiso

#endif // SYMISO_PERMUTATION_HPP
